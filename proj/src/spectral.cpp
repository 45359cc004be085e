#include "conecert/spectral.hpp"

#include "conecert/number_field.hpp"

#include <algorithm>

namespace conecert {

std::string to_string(Dominance d) {
    switch (d) {
        case Dominance::UniqueSimplePositive: return "UniqueSimplePositive";
        case Dominance::UniqueSimpleNegative: return "UniqueSimpleNegative";
        case Dominance::NotUniqueOrNotSimple: return "NotUniqueOrNotSimple";
    }
    return "?";
}

int SpectralData::conjugate_of(std::size_t i) const {
    const AlgebraicNumber& x = roots[i].value;
    if (x.is_real()) return -1;
    return x.imag_sign() > 0 ? static_cast<int>(i) + 1 : static_cast<int>(i) - 1;
}

namespace {

bool is_zero_root(const AlgebraicNumber& x) { return x.is_real() && x.sign() == 0; }

}  // namespace

SpectralData analyze(const Matrix& a) {
    if (!a.is_square() || a.rows() == 0) throw std::invalid_argument("analyze: need a nonempty square matrix");
    SpectralData s;
    s.char_poly = char_poly(a);
    s.roots = isolate_roots(s.char_poly);

    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < s.roots.size(); ++i) {
        if (is_zero_root(s.roots[i].value)) continue;
        if (!best || compare_moduli(s.roots[i].value, s.roots[*best].value) == Ordering::Greater) best = i;
    }
    if (!best) return s;  // nilpotent

    const Root& top = s.roots[*best];
    bool unique = top.multiplicity == 1 && top.value.is_real();
    for (std::size_t i = 0; unique && i < s.roots.size(); ++i) {
        if (i == *best || is_zero_root(s.roots[i].value)) continue;
        if (compare_moduli(top.value, s.roots[i].value) != Ordering::Greater) unique = false;
    }
    if (!unique) return s;

    Root dom = s.roots[*best];
    s.roots.erase(s.roots.begin() + static_cast<long>(*best));
    s.roots.insert(s.roots.begin(), dom);
    s.dominance = dom.value.sign() > 0 ? Dominance::UniqueSimplePositive : Dominance::UniqueSimpleNegative;
    return s;
}

Rational gap_lower_bound(const SpectralData& s, const std::vector<unsigned>& norm_orders) {
    const AlgebraicNumber& l1 = s.dominant();
    const Rational floor_eps = Rational(1, Integer(1) << 200);
    for (Rational eps(1, 64); eps >= floor_eps; eps /= 256) {
        RatInterval e1 = l1.refine_real(eps);
        Rational lam = l1.sign() > 0 ? e1.lo : Rational(-e1.hi);
        if (s.roots.size() == 1) return lam > 0 ? lam : Rational(0);
        std::optional<Rational> g;
        bool ok = true;
        for (std::size_t i = 1; i < s.roots.size() && ok; ++i) {
            const AlgebraicNumber& x = s.roots[i].value;
            unsigned ord = i < norm_orders.size() ? norm_orders[i] : 0;
            Rational upper;
            if (x.is_real()) {
                RatInterval e = x.refine_real(eps);
                upper = std::max(abs_of(e.lo), abs_of(e.hi));
            } else if (ord == 0) {
                upper = sqrt_upper(norm2_enclosure(x, eps).hi, 64);
            } else {
                upper = ps_norm_enclosure(x.refine(eps), ord, eps).hi;
            }
            Rational gap = lam - upper;
            if (gap <= 0) ok = false;
            else if (!g || gap < *g) g = gap;
        }
        if (ok) return *g;
    }
    return Rational(0);
}

bool is_companion(const Matrix& a) {
    if (!a.is_square()) return false;
    const std::size_t d = a.rows();
    for (std::size_t i = 0; i + 1 < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (a(i, j) != (j == i + 1 ? 1 : 0)) return false;
    return true;
}

namespace {

std::vector<UniPoly> companion_chain_vector(std::size_t d, unsigned j, const Rational& eps, const UniPoly& f) {
    // eps^{j-1} (binom(l, j-1) x^{l-j+1})_{l}
    const Rational scale = pow(eps, j - 1);
    std::vector<UniPoly> v(d);
    for (std::size_t l = 0; l < d; ++l) {
        if (l + 1 < j) continue;
        Rational c = scale * Rational(binomial(static_cast<unsigned>(l), j - 1));
        v[l] = UniPoly::monomial(c, static_cast<unsigned>(l + 1 - j)) % f;
    }
    return v;
}

// S with a = S C S^{-1}, C the companion matrix of the characteristic polynomial.
std::optional<Matrix> companion_similarity(const Matrix& a) {
    const std::size_t d = a.rows();
    const Matrix at = a.transpose();
    std::vector<Vec> candidates;
    for (std::size_t i = 0; i < d; ++i) {
        Vec e(d, Rational(0));
        e[i] = 1;
        candidates.push_back(e);
    }
    candidates.emplace_back(d, Rational(1));
    for (int t = 0; t < 16; ++t) {
        Vec w(d);
        for (std::size_t i = 0; i < d; ++i) w[i] = Rational(static_cast<long>((7 * t + 3 * i * i + 5 * i + 1) % 11) - 5);
        candidates.push_back(w);
    }
    for (const Vec& w : candidates) {
        Matrix k(d, d);
        Vec v = w;
        for (std::size_t j = 0; j < d; ++j) {
            k.set_col(j, v);
            v = at * v;
        }
        if (determinant(k) != 0) return inverse(k.transpose());
    }
    return std::nullopt;
}

}  // namespace

JordanBasis build_basis(const Matrix& a, const SpectralData& s, const Rational& eps) {
    if (s.dominance == Dominance::NotUniqueOrNotSimple)
        throw BasisFailure("no unique simple dominant eigenvalue");
    if (eps <= 0) throw std::invalid_argument("build_basis: eps must be positive");
    const std::size_t d = a.rows();
    JordanBasis b;
    b.eps = eps;
    b.companion = is_companion(a);

    std::optional<Matrix> sim;
    if (!b.companion) {
        sim = companion_similarity(a);
        if (!sim) throw BasisFailure("the matrix is derogatory (no cyclic vector)");
    }

    auto make_column = [&](std::size_t root, unsigned j) {
        const UniPoly& f = s.roots[root].value.defpoly();
        ExactColumn c;
        c.root = root;
        c.chain = j;
        c.entries = companion_chain_vector(d, j, eps, f);
        if (sim) {
            std::vector<UniPoly> t(d);
            for (std::size_t r = 0; r < d; ++r) {
                for (std::size_t k = 0; k < d; ++k) {
                    if ((*sim)(r, k) != 0 && !c.entries[k].is_zero()) t[r] += c.entries[k] * (*sim)(r, k);
                }
                t[r] = t[r] % f;
            }
            c.entries = std::move(t);
        }
        return c;
    };

    b.columns.push_back(make_column(0, 1));
    for (std::size_t i = 1; i < s.roots.size(); ++i) {
        if (!s.roots[i].value.is_real()) continue;
        for (unsigned j = 1; j <= s.roots[i].multiplicity; ++j) b.columns.push_back(make_column(i, j));
    }
    for (std::size_t i = 1; i < s.roots.size(); ++i) {
        int ci = s.conjugate_of(i);
        if (ci < 0 || ci < static_cast<int>(i)) continue;
        for (unsigned j = 1; j <= s.roots[i].multiplicity; ++j) {
            ExactColumn up = make_column(i, j);
            ExactColumn down = up;
            down.root = static_cast<std::size_t>(ci);
            const int n = static_cast<int>(b.columns.size());
            up.conj = n + 1;
            down.conj = n;
            b.columns.push_back(std::move(up));
            b.columns.push_back(std::move(down));
        }
    }
    if (b.columns.size() != d) throw BasisFailure("eigenvalue multiplicities do not add up to the dimension");

    if (sim) {
        // rational simple real eigenvectors: scale so the first nonzero entry has modulus one
        for (auto& c : b.columns) {
            if (c.conj >= 0 || s.roots[c.root].multiplicity != 1) continue;
            if (!std::all_of(c.entries.begin(), c.entries.end(), [](const UniPoly& p) { return p.degree() <= 0; }))
                continue;
            auto it = std::find_if(c.entries.begin(), c.entries.end(), [](const UniPoly& p) { return !p.is_zero(); });
            if (it == c.entries.end()) continue;
            Rational k = Rational(1) / abs_of(it->coeff(0));
            for (auto& p : c.entries) p *= k;
        }
    }

    auto signs = dominant_signs(s, b);
    auto first = std::find_if(signs.begin(), signs.end(), [](int v) { return v != 0; });
    if (first == signs.end()) throw BasisFailure("dominant eigenvector vanishes");
    if (*first < 0)
        for (auto& p : b.columns[0].entries) p = -p;

    if (!residuals_vanish(a, s, b)) throw BasisFailure("basis relations do not hold exactly");
    return b;
}

bool residuals_vanish(const Matrix& a, const SpectralData& s, const JordanBasis& b) {
    const std::size_t d = a.rows();
    for (std::size_t c = 0; c < b.columns.size(); ++c) {
        const ExactColumn& col = b.columns[c];
        const UniPoly& f = s.roots[col.root].value.defpoly();
        const ExactColumn* prev = nullptr;
        if (col.chain > 1) {
            for (const auto& other : b.columns)
                if (other.root == col.root && other.chain + 1 == col.chain) prev = &other;
            if (!prev) return false;
        }
        for (std::size_t r = 0; r < d; ++r) {
            UniPoly acc;
            for (std::size_t k = 0; k < d; ++k)
                if (a(r, k) != 0) acc += col.entries[k] * a(r, k);
            acc -= UniPoly::x() * col.entries[r];
            if (prev) acc -= prev->entries[r] * b.eps;
            if (!(acc % f).is_zero()) return false;
        }
    }
    return true;
}

std::vector<int> dominant_signs(const SpectralData& s, const JordanBasis& b) {
    std::vector<int> out;
    for (const auto& q : b.columns.at(0).entries) out.push_back(sign_at(q, s.dominant()));
    return out;
}

RationalBasis rationalize(const SpectralData& s, const JordanBasis& b, unsigned digits) {
    const Rational tol = decimal_eps(digits);
    RationalBasis rb;
    rb.digits = digits;
    const std::size_t d = b.columns.size();
    rb.cols.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
        const ExactColumn& col = b.columns[j];
        rb.conj.push_back(col.conj);
        rb.root.push_back(static_cast<int>(col.root));
        if (col.conj >= 0 && col.conj < static_cast<int>(j)) {
            for (const auto& z : rb.cols[static_cast<std::size_t>(col.conj)]) rb.cols[j].push_back(z.conj());
            continue;
        }
        const AlgebraicNumber& x = s.roots[col.root].value;
        for (const auto& q : col.entries) {
            if (q.degree() <= 0) {
                rb.cols[j].emplace_back(q.coeff(0));
                continue;
            }
            ComplexInterval e = eval_enclosure(q, x, tol);
            // any point of [hi - tol, lo + tol] is within tol of the exact value
            Rational re = simplest_between(e.re.hi - tol, e.re.lo + tol);
            Rational im = x.is_real() ? Rational(0) : simplest_between(e.im.hi - tol, e.im.lo + tol);
            rb.cols[j].emplace_back(re, im);
        }
    }
    if (determinant(real_form(rb)) == 0) throw BasisFailure("rational basis is singular at " + std::to_string(digits) + " digits");
    return rb;
}

Matrix real_form(const RationalBasis& b) {
    const std::size_t d = b.dim();
    if (d == 0 || b.conj.size() != d) throw std::invalid_argument("basis: shape mismatch");
    for (const auto& c : b.cols)
        if (c.size() != d) throw std::invalid_argument("basis: columns must have length " + std::to_string(d));
    auto is_real_col = [&](std::size_t j) {
        return std::all_of(b.cols[j].begin(), b.cols[j].end(), [](const QComplex& z) { return z.im == 0; });
    };
    if (b.conj[0] >= 0 || !is_real_col(0)) throw std::invalid_argument("basis: column 1 must be real");
    Matrix r(d, d);
    std::size_t out = 0;
    auto put_re = [&](std::size_t j) {
        for (std::size_t i = 0; i < d; ++i) r(i, out) = b.cols[j][i].re;
        ++out;
    };
    put_re(0);
    for (std::size_t j = 1; j < d; ++j) {
        const int p = b.conj[j];
        if (p < 0) {
            if (!is_real_col(j)) throw std::invalid_argument("basis: unpaired column " + std::to_string(j + 1) + " is not real");
            put_re(j);
            continue;
        }
        const auto q = static_cast<std::size_t>(p);
        if (q >= d || q == j || q == 0 || b.conj[q] != static_cast<int>(j))
            throw std::invalid_argument("basis: inconsistent conjugation pairing at column " + std::to_string(j + 1));
        for (std::size_t i = 0; i < d; ++i)
            if (!(b.cols[q][i] == b.cols[j][i].conj()))
                throw std::invalid_argument("basis: columns " + std::to_string(j + 1) + " and " +
                                            std::to_string(q + 1) + " are not conjugate");
        if (q < j) continue;
        put_re(j);
        for (std::size_t i = 0; i < d; ++i) r(i, out) = b.cols[j][i].im;
        ++out;
    }
    return r;
}

}  // namespace conecert
