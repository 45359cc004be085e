#pragma once

#include "conecert/algebraic.hpp"
#include "conecert/poly.hpp"

#include <vector>

namespace conecert {

struct Root {
    AlgebraicNumber value;
    unsigned multiplicity = 1;
};

/// All complex roots of p with multiplicities. Real roots come first in
/// increasing order, followed by non-real roots, each upper half-plane root
/// immediately followed by its conjugate. Each root's defining polynomial is
/// the square-free factor of p it belongs to.
using RootSet = std::vector<Root>;

RootSet isolate_roots(const UniPoly& p);

/// Number of distinct real roots of p (p nonzero).
int count_real_roots(const UniPoly& p);

enum class Ordering { Less, Equal, Greater };

/// Exact comparison of |x| and |y|.
Ordering compare_moduli(const AlgebraicNumber& x, const AlgebraicNumber& y);

/// Polynomial whose roots are all products r_i * r_j of roots of p (with
/// multiplicity), so that |x|^2 is among its roots for every root x of p.
UniPoly product_roots_poly(const UniPoly& p);

/// Smallest N >= 0 with p(n) > 0 for every integer n >= N. Throws
/// std::domain_error when the leading coefficient is not positive.
Integer positivity_threshold(const UniPoly& p);

}  // namespace conecert
