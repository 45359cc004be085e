#pragma once

#include "conecert/interval.hpp"
#include "conecert/poly.hpp"

#include <memory>
#include <optional>
#include <string>

namespace conecert {

/// An exact real or complex algebraic number: a square-free defining
/// polynomial together with an isolating region (an open interval with a sign
/// change for real roots, a rectangle with root-free boundary for non-real
/// roots, or a single point once the value is known to be (Gaussian) rational).
///
/// Copies share refinement state; refinement is serialized by a mutex.
class AlgebraicNumber {
public:
    AlgebraicNumber();  // zero
    static AlgebraicNumber rational(const Rational& q);
    static AlgebraicNumber gaussian(const QComplex& z);
    /// The unique root of the square-free p in the open interval (lo, hi);
    /// p(lo) and p(hi) must have opposite signs. lo == hi means the point.
    static AlgebraicNumber real_root(const UniPoly& p, const Rational& lo, const Rational& hi);
    /// The unique root of the square-free p inside box (boundary root-free),
    /// with the box not meeting the real axis.
    static AlgebraicNumber complex_root(const UniPoly& p, const Box& box);

    const UniPoly& defpoly() const;
    bool is_real() const;
    /// True once the value is held as an exact point.
    bool is_point() const;

    /// Exact value when the number is rational (decided, not guessed).
    std::optional<Rational> to_rational() const;
    /// Exact value when the number is a Gaussian rational.
    std::optional<QComplex> to_gaussian() const;

    /// Current enclosure, no refinement.
    ComplexInterval enclosure() const;
    /// Enclosure with both side lengths at most eps (eps > 0).
    ComplexInterval refine(const Rational& eps) const;
    /// Real enclosure of width at most eps; throws for non-real numbers.
    RatInterval refine_real(const Rational& eps) const;

    AlgebraicNumber conj() const;
    /// Sign of a real number (exact).
    int sign() const;
    /// Sign of the imaginary part (exact: complex boxes never meet the axis).
    int imag_sign() const;

    /// Decimal approximation for display only.
    std::string to_string(unsigned digits = 6) const;
    double approx_re() const;
    double approx_im() const;

    struct State;  // implementation detail

private:
    explicit AlgebraicNumber(std::shared_ptr<State> s) : state_(std::move(s)) {}
    std::shared_ptr<State> state_;

    friend bool same_number(const AlgebraicNumber& x, const AlgebraicNumber& y);
};

/// Exact equality.
bool same_number(const AlgebraicNumber& x, const AlgebraicNumber& y);

/// Rational enclosure of |x|^2 with width at most eps.
RatInterval norm2_enclosure(const AlgebraicNumber& x, const Rational& eps);

/// Whether q(x) = 0, decided exactly.
bool vanishes_at(const UniPoly& q, const AlgebraicNumber& x);

/// Exact sign of q(x) for real x.
int sign_at(const UniPoly& q, const AlgebraicNumber& x);

/// Enclosure of q(x) with both side lengths at most eps.
ComplexInterval eval_enclosure(const UniPoly& q, const AlgebraicNumber& x, const Rational& eps);

}  // namespace conecert
