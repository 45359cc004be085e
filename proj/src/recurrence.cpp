#include "conecert/recurrence.hpp"

#include <algorithm>

namespace conecert {

bool Recurrence::is_constant() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const UniPoly& p) { return p.degree() <= 0; });
}

void Recurrence::validate() const {
    if (coeffs.size() < 2) throw std::invalid_argument("recurrence needs order at least 1");
    if (coeffs.back().is_zero()) throw std::invalid_argument("leading coefficient p_d is zero");
    if (initial.size() < order())
        throw std::invalid_argument("recurrence of order " + std::to_string(order()) + " needs " +
                                    std::to_string(order()) + " initial values, got " +
                                    std::to_string(initial.size()));
}

Recurrence from_homogeneous(std::string name, const std::vector<UniPoly>& q, std::vector<Rational> initial) {
    Recurrence r;
    r.name = std::move(name);
    r.coeffs.reserve(q.size());
    for (std::size_t i = 0; i + 1 < q.size(); ++i) r.coeffs.push_back(-q[i]);
    if (!q.empty()) r.coeffs.push_back(q.back());
    r.initial = std::move(initial);
    return r;
}

std::vector<Rational> terms(const Recurrence& r, std::size_t count) {
    r.validate();
    const std::size_t d = r.order();
    std::vector<Rational> u;
    u.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        if (k < d) {
            u.push_back(r.initial[k]);
            continue;
        }
        const Rational n(static_cast<long>(k - d));
        Rational lead = r.coeffs[d].eval(n);
        if (lead == 0) {
            if (k < r.initial.size()) {
                u.push_back(r.initial[k]);
                continue;
            }
            throw MissingData("p_d vanishes at n = " + to_string(n) + "; supply u_" + std::to_string(k));
        }
        Rational acc(0);
        for (std::size_t i = 0; i < d; ++i) {
            const UniPoly& p = r.coeffs[i];
            if (p.is_zero()) continue;
            acc += p.eval(n) * u[k - d + i];
        }
        acc /= lead;
        if (k < r.initial.size() && r.initial[k] != acc)
            throw std::invalid_argument("initial value u_" + std::to_string(k) + " = " + to_string(r.initial[k]) +
                                        " contradicts the recurrence (expected " + to_string(acc) + ")");
        u.push_back(std::move(acc));
    }
    return u;
}

namespace {

void integer_roots_in(const UniPoly& p, const SturmSequence& s, const Rational& a, const Rational& b, int count,
                      std::vector<Integer>& out) {
    if (count == 0) return;
    if (b - a <= 1) {
        for (Integer k = floor_of(a) + 1; k <= floor_of(b); ++k) {
            if (p.eval(Rational(k)) == 0) out.push_back(k);
        }
        return;
    }
    Rational m = (a + b) / 2;
    int left = s.count_half_open(a, m);
    integer_roots_in(p, s, a, m, left, out);
    integer_roots_in(p, s, m, b, count - left, out);
}

}  // namespace

std::vector<Integer> nonnegative_integer_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("nonnegative_integer_roots of the zero polynomial");
    std::vector<Integer> out;
    if (p.degree() < 1) return out;
    UniPoly sf = squarefree_part(p);
    SturmSequence s(sf);
    Rational a(-1, 2), b(ceil_of(cauchy_root_bound(sf)) + 1);
    integer_roots_in(sf, s, a, b, s.count_half_open(a, b), out);
    return out;
}

Normalized normalize_shift(const Recurrence& r) {
    r.validate();
    if (r.coeffs.front().is_zero()) throw std::invalid_argument("p_0 is zero; the order can be lowered");
    auto roots = nonnegative_integer_roots(r.coeffs.front() * r.coeffs.back());
    Normalized out;
    out.rec = r;
    if (roots.empty()) {
        out.rec.initial.resize(r.order());
        return out;
    }
    const unsigned shift = static_cast<unsigned>(roots.back().get_ui()) + 1;
    const std::size_t d = r.order();
    std::vector<Rational> u = terms(r, shift + d);
    out.prefix.assign(u.begin(), u.begin() + shift);
    out.rec.initial.assign(u.begin() + shift, u.end());
    const Rational sh(shift);
    for (auto& p : out.rec.coeffs) p = p.shift(sh);
    out.rec.shift_offset = r.shift_offset + shift;
    return out;
}

MatrixRecurrence companion(const Recurrence& r) {
    r.validate();
    const std::size_t d = r.order();
    MatrixRecurrence m;
    m.name = r.name;
    m.shift_offset = r.shift_offset;
    const Rational lc = r.coeffs[d].lc();
    m.A.den = r.coeffs[d] * (Rational(1) / lc);
    m.A.num.assign(d, std::vector<UniPoly>(d));
    for (std::size_t i = 0; i + 1 < d; ++i) m.A.num[i][i + 1] = m.A.den;
    for (std::size_t j = 0; j < d; ++j) m.A.num[d - 1][j] = r.coeffs[j] * (Rational(1) / lc);
    m.U0.assign(r.initial.begin(), r.initial.begin() + static_cast<long>(d));
    return m;
}

std::variant<Matrix, NotPoincare> limit_matrix(const RatFunMatrix& a) {
    const std::size_t d = a.size();
    const int dd = a.den.degree();
    Matrix lim(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const UniPoly& p = a.num[i][j];
            if (p.degree() > dd)
                return NotPoincare{"entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                   ") diverges as n grows"};
            lim(i, j) = p.coeff(static_cast<std::size_t>(dd)) / a.den.lc();
        }
    }
    if (lim.is_zero()) return NotPoincare{"the limit matrix is zero"};
    return lim;
}

std::vector<Vec> iterate(const MatrixRecurrence& m, std::size_t count) {
    std::vector<Vec> out;
    out.reserve(count + 1);
    out.push_back(m.U0);
    for (std::size_t j = 0; j < count; ++j) out.push_back(m.A.eval(Rational(static_cast<long>(j))) * out.back());
    return out;
}

UniPoly determinant_numerator(const RatFunMatrix& m) {
    const std::size_t d = m.size();
    int maxdeg = 0;
    for (const auto& row : m.num)
        for (const auto& p : row) maxdeg = std::max(maxdeg, p.degree());
    const std::size_t npts = d * static_cast<std::size_t>(maxdeg) + 1;
    // Newton interpolation through n = 0, 1, ..., npts - 1
    std::vector<Rational> xs(npts), dd(npts);
    for (std::size_t k = 0; k < npts; ++k) {
        xs[k] = Rational(static_cast<long>(k));
        dd[k] = determinant(m.eval_num(xs[k]));
    }
    for (std::size_t level = 1; level < npts; ++level)
        for (std::size_t k = npts - 1; k >= level; --k) dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);
    UniPoly result = UniPoly::constant(dd[npts - 1]);
    for (std::size_t k = npts - 1; k-- > 0;) {
        result *= UniPoly({Rational(-xs[k]), Rational(1)});
        result += UniPoly::constant(dd[k]);
    }
    return result;
}

NormalizedMatrix normalize_shift(const MatrixRecurrence& m) {
    NormalizedMatrix out;
    out.rec = m;
    UniPoly det = determinant_numerator(m.A);
    if (det.is_zero()) throw std::invalid_argument("matrix recurrence is singular for every n");
    auto roots = nonnegative_integer_roots(det * m.A.den);
    if (roots.empty()) return out;
    const unsigned shift = static_cast<unsigned>(roots.back().get_ui()) + 1;
    Vec u = m.U0;
    for (unsigned j = 0; j < shift; ++j) {
        out.prefix.push_back(u);
        const Rational n(static_cast<long>(j));
        if (m.A.den.eval(n) == 0) throw MissingData("matrix denominator vanishes at n = " + to_string(n));
        u = m.A.eval(n) * u;
    }
    const Rational sh(shift);
    for (auto& row : out.rec.A.num)
        for (auto& p : row) p = p.shift(sh);
    out.rec.A.den = m.A.den.shift(sh);
    out.rec.U0 = u;
    out.rec.shift_offset = m.shift_offset + shift;
    return out;
}

}  // namespace conecert
