#pragma once

#include "conecert/interval.hpp"
#include "conecert/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conecert {

/// Dense univariate polynomial over Q, low degree first. The leading
/// coefficient is nonzero unless the polynomial is zero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<Rational> coeffs);
    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, unsigned degree);
    static UniPoly x() { return monomial(Rational(1), 1); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational lc() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Rational eval(const Rational& x) const;
    RatInterval eval(const RatInterval& x) const;
    QComplex eval(const QComplex& z) const;
    ComplexInterval eval(const ComplexInterval& z) const;
    /// Sign of p(x) at a rational point.
    int sign_at(const Rational& x) const { return sign(eval(x)); }

    UniPoly derivative() const;
    UniPoly monic() const;
    /// Positive rational multiple with coprime integer coefficients.
    UniPoly primitive() const;
    UniPoly compose(const UniPoly& inner) const;
    /// p(x + a)
    UniPoly shift(const Rational& a) const;
    /// p(c * x)
    UniPoly scale_argument(const Rational& c) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

UniPoly operator+(UniPoly a, const UniPoly& b);
UniPoly operator-(UniPoly a, const UniPoly& b);
UniPoly operator*(UniPoly a, const UniPoly& b);
UniPoly operator*(UniPoly a, const Rational& c);
UniPoly operator*(const Rational& c, UniPoly a);

/// Euclidean division; throws std::domain_error on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);  // exact quotient part
UniPoly operator%(const UniPoly& a, const UniPoly& b);

/// Monic gcd (zero if both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
struct XGcd {
    UniPoly g, s, t;
};
XGcd xgcd(const UniPoly& a, const UniPoly& b);

/// Monic square-free part.
UniPoly squarefree_part(const UniPoly& p);

/// Yun decomposition: p = lc * prod f_i^{m_i}, each f_i monic square-free,
/// pairwise coprime. Only factors of positive degree are returned.
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& p);

/// Upper bound on the modulus of all complex roots (Cauchy).
Rational cauchy_root_bound(const UniPoly& p);

/// Sturm sequence p, p', -rem(...), ... of a nonzero polynomial.
class SturmSequence {
public:
    explicit SturmSequence(const UniPoly& p);
    const UniPoly& base() const { return seq_.front(); }
    int variations_at(const Rational& x) const;
    int variations_at_pos_inf() const;
    int variations_at_neg_inf() const;
    /// Number of distinct real roots in the half-open interval (a, b].
    int count_half_open(const Rational& a, const Rational& b) const;
    /// Number of distinct real roots in the closed interval [a, b].
    int count_closed(const Rational& a, const Rational& b) const;
    int count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

private:
    std::vector<UniPoly> seq_;
};

/// Cauchy index of q/p over (a, b) via the signed remainder sequence.
/// Requires p(a) != 0 and p(b) != 0.
int cauchy_index(const UniPoly& p, const UniPoly& q, const Rational& a, const Rational& b);

/// Restriction of p to the segment z0 -> z1, as re/im polynomials in t in [0,1].
std::pair<UniPoly, UniPoly> restrict_to_segment(const UniPoly& p, const QComplex& z0, const QComplex& z1);

/// Axis-aligned rectangle [x0,x1] x [y0,y1] with rational corners.
struct Box {
    Rational x0, x1, y0, y1;

    Rational width() const { return std::max(Rational(x1 - x0), Rational(y1 - y0)); }
    ComplexInterval as_interval() const { return {RatInterval(x0, x1), RatInterval(y0, y1)}; }
    Box mirrored() const { return {x0, x1, Rational(-y1), Rational(-y0)}; }
    friend bool operator==(const Box& a, const Box& b) {
        return a.x0 == b.x0 && a.x1 == b.x1 && a.y0 == b.y0 && a.y1 == b.y1;
    }
};

/// Exact number of roots (with multiplicity) of p strictly inside the box,
/// via the winding number of p along its boundary. Empty when some root lies
/// on the boundary, in which case the caller must perturb the box.
std::optional<int> count_roots_in_box(const UniPoly& p, const Box& box);

}  // namespace conecert
