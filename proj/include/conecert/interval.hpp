#pragma once

#include "conecert/rational.hpp"

#include <iosfwd>

namespace conecert {

/// Closed interval [lo, hi] with rational endpoints. Every operation is
/// outward-conservative: the exact result on members lies in the output.
struct RatInterval {
    Rational lo;
    Rational hi;

    RatInterval() = default;
    RatInterval(const Rational& point) : lo(point), hi(point) {}  // NOLINT(implicit)
    RatInterval(const Rational& l, const Rational& h);

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const RatInterval& other) const { return lo <= other.lo && other.hi <= hi; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    bool positive() const { return lo > 0; }
    bool negative() const { return hi < 0; }
    Rational mag() const;  // max |x| over the interval
    Rational mig() const;  // min |x| over the interval

    RatInterval operator-() const { return {Rational(-hi), Rational(-lo)}; }
    RatInterval& operator+=(const RatInterval& o);
    RatInterval& operator-=(const RatInterval& o);
    RatInterval& operator*=(const RatInterval& o);

    friend bool operator==(const RatInterval& a, const RatInterval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

RatInterval operator+(RatInterval a, const RatInterval& b);
RatInterval operator-(RatInterval a, const RatInterval& b);
RatInterval operator*(RatInterval a, const RatInterval& b);
/// Division; throws std::domain_error when the divisor contains zero.
RatInterval operator/(const RatInterval& a, const RatInterval& b);
RatInterval square(const RatInterval& a);
RatInterval pow(const RatInterval& a, unsigned k);
RatInterval hull(const RatInterval& a, const RatInterval& b);
std::ostream& operator<<(std::ostream& os, const RatInterval& x);

/// Gaussian rational a + bi.
struct QComplex {
    Rational re;
    Rational im;

    QComplex() = default;
    QComplex(const Rational& r) : re(r), im(0) {}  // NOLINT(implicit)
    QComplex(const Rational& r, const Rational& i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    QComplex conj() const { return {re, Rational(-im)}; }
    Rational norm2() const { return re * re + im * im; }

    friend bool operator==(const QComplex& a, const QComplex& b) { return a.re == b.re && a.im == b.im; }
};

QComplex operator+(const QComplex& a, const QComplex& b);
QComplex operator-(const QComplex& a, const QComplex& b);
QComplex operator-(const QComplex& a);
QComplex operator*(const QComplex& a, const QComplex& b);
QComplex operator/(const QComplex& a, const QComplex& b);

/// Axis-aligned rectangle in the complex plane.
struct ComplexInterval {
    RatInterval re;
    RatInterval im;

    ComplexInterval() = default;
    ComplexInterval(const RatInterval& r, const RatInterval& i) : re(r), im(i) {}
    ComplexInterval(const QComplex& z) : re(z.re), im(z.im) {}  // NOLINT(implicit)

    Rational width() const;  // max of both side lengths
    RatInterval norm2() const { return square(re) + square(im); }
    ComplexInterval conj() const { return {re, -im}; }
};

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval pow(const ComplexInterval& a, unsigned k);

}  // namespace conecert
