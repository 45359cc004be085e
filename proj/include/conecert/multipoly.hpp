#pragma once

#include "conecert/poly.hpp"
#include "conecert/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace conecert {

/// Sparse multivariate polynomial over Q in a fixed number of variables.
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}
    static MultiPoly constant(std::size_t nvars, const Rational& c);
    static MultiPoly variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Exponents& e) const;
    Rational constant_term() const { return coeff(Exponents(nvars_, 0)); }
    unsigned degree_in(std::size_t var) const;
    unsigned total_degree() const;

    void add_term(const Exponents& e, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Rational eval(const std::vector<Rational>& point) const;

    /// Rewrites every var^k with k >= 2 using var^2 = replacement, so that
    /// var occurs with exponent at most one.
    MultiPoly reduce_square(std::size_t var, const MultiPoly& replacement) const;

    /// Coefficients of the powers of var: result[i] multiplies var^i.
    std::vector<MultiPoly> coefficients_in(std::size_t var) const;

    /// Substitutes a rational value for var.
    MultiPoly substitute(std::size_t var, const Rational& value) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::size_t nvars_ = 0;
    std::map<Exponents, Rational> terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(MultiPoly a, const Rational& c);

/// Lower bound of p over the box [-1,1]^nvars: constant term, plus min(0, c)
/// for monomials of even degree in every variable, minus |c| for the others.
/// Exact for constant and linear polynomials.
Rational box_lower_bound(const MultiPoly& p);

/// Bivariate convenience form: coefficients c[i][j] of a^i b^j.
Rational box_lower_bound(const std::vector<std::vector<Rational>>& c);

}  // namespace conecert
