#pragma once

#include "conecert/cone.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace conecert {

class LeadingCoefficientNotPositive : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One membership inequality of A(n) g for a generator g, cleared of the
/// (monic) denominator: P(n, params) = sum_k coeffs[k] n^k >= 0.
/// Vandergraft polynomials carry MultiPoly coefficients in the generator
/// parameters (already reduced with e^2 = 1, b^2 = 1 - a^2); polyhedral ones
/// have exact coefficients in the cone's number field.
struct InequalityPolynomial {
    std::string label;
    std::vector<MultiPoly> coeffs;
    std::vector<FieldElem> field_coeffs;

    bool symbolic() const { return !coeffs.empty(); }
};

/// Lower bound P~(n) <= P(n, params) for n >= 0, with the smallest m such
/// that P~(n) > 0 for all integers n >= m.
struct BoundPolynomial {
    std::string label;
    UniPoly bound;
    Integer threshold;
};

struct StabilityWitness {
    Integer m;
    Integer m0;
    std::vector<BoundPolynomial> bounds;
};

/// A(n) = N(n) / D(n) with D monic.
RatFunMatrix monic_denominator(const RatFunMatrix& a);

/// Number of polyhedral generators above which the per-coefficient minima
/// are taken over each slot separately instead of per generator.
inline constexpr std::size_t kPerGeneratorLimit = 4096;

/// Inequality polynomials for generator index gen (polyhedral cones) or for
/// the whole symbolic family (Vandergraft cones, gen is ignored).
std::vector<InequalityPolynomial> inequality_polynomials(const Cone& c, const RatFunMatrix& a, std::size_t gen = 0);

/// Coefficientwise lower bound of an inequality polynomial. The leading
/// coefficient is refined until its bound is positive; throws
/// LeadingCoefficientNotPositive when it is not positive.
UniPoly lower_bound_polynomial(const InequalityPolynomial& p);

/// Stability index: membership of A(n) g in the cone for every generator g
/// and every n >= m. m0 is the positivity threshold of the denominator.
StabilityWitness stability_index(const Cone& c, const RatFunMatrix& a);

}  // namespace conecert
