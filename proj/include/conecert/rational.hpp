#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace conecert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised on malformed textual input (rationals, polynomials, files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "n", "num/den" or a plain decimal such as "-0.25".
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form, or "n" for integers.
std::string to_string(const Rational& q);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline Rational abs_of(const Rational& q) { return abs(q); }

Rational pow(const Rational& base, unsigned exponent);

/// The rational of smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Rational bounds on sqrt(q) for q >= 0, accurate to 2^-bits.
Rational sqrt_lower(const Rational& q, unsigned bits);
Rational sqrt_upper(const Rational& q, unsigned bits);

/// 10^-digits as an exact rational.
Rational decimal_eps(unsigned digits);

double to_double(const Rational& q);

Integer binomial(unsigned n, unsigned k);

}  // namespace conecert
