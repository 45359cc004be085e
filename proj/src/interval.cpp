#include "conecert/interval.hpp"

#include <algorithm>
#include <ostream>

namespace conecert {

RatInterval::RatInterval(const Rational& l, const Rational& h) : lo(l), hi(h) {
    if (lo > hi) throw std::invalid_argument("RatInterval: lo > hi");
}

Rational RatInterval::mag() const { return std::max(abs_of(lo), abs_of(hi)); }

Rational RatInterval::mig() const {
    if (contains_zero()) return Rational(0);
    return std::min(abs_of(lo), abs_of(hi));
}

RatInterval& RatInterval::operator+=(const RatInterval& o) {
    lo += o.lo;
    hi += o.hi;
    return *this;
}

RatInterval& RatInterval::operator-=(const RatInterval& o) {
    Rational nlo = lo - o.hi;
    hi = hi - o.lo;
    lo = nlo;
    return *this;
}

RatInterval& RatInterval::operator*=(const RatInterval& o) {
    if (is_point() && o.is_point()) {
        lo *= o.lo;
        hi = lo;
        return *this;
    }
    Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    lo = std::min({a, b, c, d});
    hi = std::max({a, b, c, d});
    return *this;
}

RatInterval operator+(RatInterval a, const RatInterval& b) { return a += b; }
RatInterval operator-(RatInterval a, const RatInterval& b) { return a -= b; }
RatInterval operator*(RatInterval a, const RatInterval& b) { return a *= b; }

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    if (b.contains_zero()) throw std::domain_error("interval division by an interval containing 0");
    RatInterval inv(Rational(1) / b.hi, Rational(1) / b.lo);
    return a * inv;
}

RatInterval square(const RatInterval& a) {
    Rational l2 = a.lo * a.lo, h2 = a.hi * a.hi;
    if (a.contains_zero()) return {Rational(0), std::max(l2, h2)};
    return {std::min(l2, h2), std::max(l2, h2)};
}

RatInterval pow(const RatInterval& a, unsigned k) {
    if (k == 0) return RatInterval(Rational(1));
    if (k % 2 == 0) {
        RatInterval s = square(a);
        RatInterval result(Rational(1));
        for (unsigned i = 0; i < k / 2; ++i) result *= s;
        return result;
    }
    // odd powers are monotone
    return {pow(a.lo, k), pow(a.hi, k)};
}

RatInterval hull(const RatInterval& a, const RatInterval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

std::ostream& operator<<(std::ostream& os, const RatInterval& x) {
    return os << '[' << to_string(x.lo) << ", " << to_string(x.hi) << ']';
}

QComplex operator+(const QComplex& a, const QComplex& b) { return {a.re + b.re, a.im + b.im}; }
QComplex operator-(const QComplex& a, const QComplex& b) { return {a.re - b.re, a.im - b.im}; }
QComplex operator-(const QComplex& a) { return {Rational(-a.re), Rational(-a.im)}; }
QComplex operator*(const QComplex& a, const QComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
QComplex operator/(const QComplex& a, const QComplex& b) {
    Rational n = b.norm2();
    if (n == 0) throw std::domain_error("complex division by zero");
    QComplex num = a * b.conj();
    return {num.re / n, num.im / n};
}

Rational ComplexInterval::width() const { return std::max(re.width(), im.width()); }

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re + b.re, a.im + b.im};
}
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re - b.re, a.im - b.im};
}
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
ComplexInterval pow(const ComplexInterval& a, unsigned k) {
    ComplexInterval result(QComplex(Rational(1)));
    ComplexInterval base = a;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

}  // namespace conecert
