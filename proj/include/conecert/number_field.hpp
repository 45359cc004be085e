#pragma once

#include "conecert/algebraic.hpp"
#include "conecert/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conecert {

/// A real number field Q(theta) given by the minimal polynomial of theta and
/// a real embedding. Only the handful of fields needed for polygon norms with
/// s in {1,2,3,4,6,8,12} exist; they are process-wide constants.
class NumberField {
public:
    static const NumberField& rationals();
    /// Smallest supported field containing cos(pi/s) and sin(pi/s) for every
    /// s in orders; empty when the combination is unsupported.
    static const NumberField* for_orders(const std::vector<unsigned>& orders);

    const std::string& name() const { return name_; }
    const UniPoly& modulus() const { return modulus_; }
    int degree() const { return modulus_.degree(); }
    const AlgebraicNumber& theta() const { return theta_; }
    /// Representation of cos(pi/s) / sin(pi/s) as polynomials in theta.
    UniPoly cos_pi_over(unsigned s) const;
    UniPoly sin_pi_over(unsigned s) const;
    bool supports(unsigned s) const;

private:
    friend struct FieldFactory;
    NumberField(std::string name, UniPoly modulus, AlgebraicNumber theta, std::vector<unsigned> orders);
    std::string name_;
    UniPoly modulus_;
    AlgebraicNumber theta_;
    std::vector<unsigned> orders_;
};

/// Element of a NumberField, kept reduced modulo the minimal polynomial, so
/// that zero-testing is exact.
class FieldElem {
public:
    FieldElem() : field_(&NumberField::rationals()) {}
    FieldElem(const NumberField& f, const Rational& c) : field_(&f), v_(UniPoly::constant(c)) {}
    FieldElem(const NumberField& f, UniPoly v);

    const NumberField& field() const { return *field_; }
    const UniPoly& poly() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }
    std::optional<Rational> as_rational() const;

    /// Exact sign of the real value.
    int sign() const;
    /// Enclosure of width at most eps.
    RatInterval enclosure(const Rational& eps) const;
    Rational lower_bound(const Rational& eps) const { return enclosure(eps).lo; }
    Rational upper_bound(const Rational& eps) const { return enclosure(eps).hi; }
    double approx() const;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator*=(const Rational& c);
    FieldElem inverse() const;

private:
    const NumberField* field_;
    UniPoly v_;
};

FieldElem operator+(FieldElem a, const FieldElem& b);
FieldElem operator-(FieldElem a, const FieldElem& b);
FieldElem operator*(FieldElem a, const FieldElem& b);
FieldElem operator*(FieldElem a, const Rational& c);
FieldElem operator*(const Rational& c, FieldElem a);
FieldElem operator/(const FieldElem& a, const FieldElem& b);
bool operator<(const FieldElem& a, const FieldElem& b);
bool operator==(const FieldElem& a, const FieldElem& b);

/// cos(k*pi/s) and sin(k*pi/s) in the given field.
std::pair<FieldElem, FieldElem> root_of_unity(const NumberField& f, unsigned s, int k);

/// The polygon norm: Minkowski functional of the regular 2s-gon with vertices
/// at the 2s-th roots of unity, at z = re + i*im. For s = 1, z must be real.
/// Throws std::domain_error otherwise.
FieldElem ps_norm(const Rational& re, const Rational& im, unsigned s);

/// Facet functionals of the 2s-gon: ||z|| = max_m Re(kappa_m z) / (1 + cos(pi/s)),
/// with kappa_m = omega^-m (1 + omega^-1). Returns (Re kappa_m, Im kappa_m)
/// for m = 0..2s-1, and 1 + cos(pi/s) as the last pair's first entry.
struct PolygonFacets {
    std::vector<std::pair<FieldElem, FieldElem>> kappa;
    FieldElem one_plus_cos;
};
PolygonFacets polygon_facets(const NumberField& f, unsigned s);

/// Interval enclosure of ||z||_{P_s} for z in a complex box (s >= 2).
RatInterval ps_norm_enclosure(const ComplexInterval& z, unsigned s, const Rational& eps);

}  // namespace conecert
