#include "conecert/stability.hpp"

#include <algorithm>

namespace conecert {

RatFunMatrix monic_denominator(const RatFunMatrix& a) {
    if (a.den.is_zero()) throw std::invalid_argument("monic_denominator: zero denominator");
    const Rational inv = Rational(1) / a.den.lc();
    if (inv == 1) return a;
    RatFunMatrix out = a;
    out.den = a.den * inv;
    for (auto& row : out.num)
        for (auto& p : row) p = p * inv;
    return out;
}

namespace {

// M_k = R^-1 N_k R where N(n) = sum_k N_k n^k.
std::vector<Matrix> transformed_coefficients(const Cone& c, const RatFunMatrix& a) {
    const std::size_t d = a.size();
    int deg = 0;
    for (const auto& row : a.num)
        for (const auto& p : row) deg = std::max(deg, p.degree());
    std::vector<Matrix> out;
    for (int k = 0; k <= deg; ++k) {
        Matrix nk(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) nk(i, j) = a.num[i][j].coeff(static_cast<std::size_t>(k));
        out.push_back(c.Rinv * nk * c.R);
    }
    return out;
}

// h_k = l^T M_k for every linear constraint l.
std::vector<std::vector<std::vector<FieldElem>>> constraint_rows(const Cone& c, const std::vector<LinearConstraint>& lcs,
                                                                 const std::vector<Matrix>& mk) {
    const std::size_t d = c.dim();
    std::vector<std::vector<std::vector<FieldElem>>> out;
    for (const auto& lc : lcs) {
        std::vector<std::vector<FieldElem>> per_k;
        for (const Matrix& m : mk) {
            std::vector<FieldElem> h(d, FieldElem(*c.field, Rational(0)));
            for (std::size_t i = 0; i < d; ++i) {
                if (lc.coef[i].is_zero()) continue;
                for (std::size_t j = 0; j < d; ++j)
                    if (m(i, j) != 0) h[j] += lc.coef[i] * m(i, j);
            }
            per_k.push_back(std::move(h));
        }
        out.push_back(std::move(per_k));
    }
    return out;
}

FieldElem dot(const std::vector<FieldElem>& h, const std::vector<FieldElem>& g) {
    FieldElem acc = h.empty() ? FieldElem() : FieldElem(h[0].field(), Rational(0));
    for (std::size_t j = 0; j < h.size(); ++j)
        if (!h[j].is_zero() && !g[j].is_zero()) acc += h[j] * g[j];
    return acc;
}

Rational field_lower_bound(const FieldElem& x, bool leading) {
    if (auto q = x.as_rational()) return *q;
    const Rational floor_eps(1, Integer(1) << 400);
    Rational eps(1, Integer(1) << 64);
    Rational lb = x.lower_bound(eps);
    if (!leading) return lb;
    if (x.sign() <= 0) return lb;
    while (lb <= 0 && eps > floor_eps) {
        eps /= Integer(1) << 32;
        lb = x.lower_bound(eps);
    }
    return lb;
}

UniPoly bound_from_coefficients(const std::vector<Rational>& lbs, const std::string& label) {
    UniPoly p(lbs);
    if (p.is_zero() || p.lc() <= 0)
        throw LeadingCoefficientNotPositive("leading coefficient bound of '" + label + "' is not positive");
    return p;
}

std::vector<InequalityPolynomial> vandergraft_polynomials(const Cone& c, const std::vector<Matrix>& mk) {
    const std::size_t d = c.dim();
    auto g = symbolic_generator(c);
    const std::size_t nv = parameter_names(c).size();
    // y[k][i]: coefficient of n^k in coordinate i of R^-1 N(n) R g
    std::vector<std::vector<MultiPoly>> y(mk.size(), std::vector<MultiPoly>(d, MultiPoly(nv)));
    for (std::size_t k = 0; k < mk.size(); ++k)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (mk[k](i, j) != 0) y[k][i] += g[j] * mk[k](i, j);

    std::vector<InequalityPolynomial> out;
    for (const auto& lc : linear_constraints(c)) {
        InequalityPolynomial p;
        p.label = lc.label;
        for (std::size_t k = 0; k < mk.size(); ++k) {
            MultiPoly s(nv);
            for (std::size_t i = 0; i < d; ++i)
                if (!lc.coef[i].is_zero()) s += y[k][i] * *lc.coef[i].as_rational();
            p.coeffs.push_back(reduce_parameters(c, s));
        }
        out.push_back(std::move(p));
    }
    const std::size_t deg = 2 * (mk.size() - 1);
    for (const Slot& s : c.slots) {
        if (!s.complex) continue;
        InequalityPolynomial p;
        p.label = "quadratic(a" + std::to_string(s.column + 1) + ")";
        for (std::size_t k = 0; k <= deg; ++k) {
            MultiPoly q(nv);
            for (std::size_t u = 0; u < mk.size(); ++u) {
                if (k < u || k - u >= mk.size()) continue;
                const std::size_t v = k - u;
                q += y[u][0] * y[v][0];
                q -= (y[u][s.coord] * y[v][s.coord] + y[u][s.coord + 1] * y[v][s.coord + 1]) * Rational(1, 4);
            }
            p.coeffs.push_back(reduce_parameters(c, q));
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

std::vector<InequalityPolynomial> inequality_polynomials(const Cone& c, const RatFunMatrix& a, std::size_t gen) {
    const RatFunMatrix am = monic_denominator(a);
    const auto mk = transformed_coefficients(c, am);
    if (c.kind == ConeKind::Vandergraft) return vandergraft_polynomials(c, mk);
    const auto lcs = linear_constraints(c);
    const auto rows = constraint_rows(c, lcs, mk);
    const auto gens = generator_coordinates(c, std::max<std::size_t>(gen + 1, kPerGeneratorLimit));
    if (gen >= gens.size()) throw std::out_of_range("inequality_polynomials: generator index out of range");
    std::vector<InequalityPolynomial> out;
    for (std::size_t l = 0; l < lcs.size(); ++l) {
        InequalityPolynomial p;
        p.label = lcs[l].label;
        for (const auto& h : rows[l]) p.field_coeffs.push_back(dot(h, gens[gen]));
        out.push_back(std::move(p));
    }
    return out;
}

UniPoly lower_bound_polynomial(const InequalityPolynomial& p) {
    std::vector<Rational> lbs;
    if (p.symbolic()) {
        for (const auto& q : p.coeffs) lbs.push_back(box_lower_bound(q));
    } else {
        std::size_t top = p.field_coeffs.size();
        while (top > 0 && p.field_coeffs[top - 1].is_zero()) --top;
        for (std::size_t k = 0; k < top; ++k) lbs.push_back(field_lower_bound(p.field_coeffs[k], k + 1 == top));
    }
    return bound_from_coefficients(lbs, p.label);
}

StabilityWitness stability_index(const Cone& c, const RatFunMatrix& a) {
    const RatFunMatrix am = monic_denominator(a);
    StabilityWitness w;
    w.m0 = am.den.degree() <= 0 ? Integer(0) : positivity_threshold(am.den);
    w.m = w.m0;
    auto add = [&w](std::string label, UniPoly bound) {
        Integer t = positivity_threshold(bound);
        if (t > w.m) w.m = t;
        w.bounds.push_back({std::move(label), std::move(bound), std::move(t)});
    };

    const auto mk = transformed_coefficients(c, am);
    if (c.kind == ConeKind::Vandergraft) {
        for (const auto& p : vandergraft_polynomials(c, mk)) add(p.label, lower_bound_polynomial(p));
        return w;
    }

    const auto lcs = linear_constraints(c);
    const auto rows = constraint_rows(c, lcs, mk);
    if (generator_count(c) <= kPerGeneratorLimit) {
        const auto gens = generator_coordinates(c, kPerGeneratorLimit);
        for (std::size_t g = 0; g < gens.size(); ++g) {
            for (std::size_t l = 0; l < lcs.size(); ++l) {
                InequalityPolynomial p;
                p.label = lcs[l].label + "@g" + std::to_string(g);
                for (const auto& h : rows[l]) p.field_coeffs.push_back(dot(h, gens[g]));
                add(p.label, lower_bound_polynomial(p));
            }
        }
        return w;
    }
    // too many generators: bound every coefficient by its own minimum
    for (std::size_t l = 0; l < lcs.size(); ++l) {
        std::vector<Rational> lbs;
        for (std::size_t k = 0; k < rows[l].size(); ++k) {
            const bool leading = k + 1 == rows[l].size();
            lbs.push_back(field_lower_bound(min_over_generators(c, rows[l][k]), leading));
        }
        add(lcs[l].label, bound_from_coefficients(lbs, lcs[l].label));
    }
    return w;
}

}  // namespace conecert
