#pragma once

#include "conecert/linalg.hpp"
#include "conecert/poly.hpp"

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace conecert {

/// Not enough initial values to iterate past a zero of the leading coefficient.
class MissingData : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// p_d(n) u_{n+d} = p_{d-1}(n) u_{n+d-1} + ... + p_0(n) u_n.
/// initial holds u_0, u_1, ... (at least d values; extra values are used
/// where p_d vanishes and are otherwise checked for consistency).
struct Recurrence {
    std::string name;
    std::vector<UniPoly> coeffs;  // p_0 .. p_d
    std::vector<Rational> initial;
    unsigned shift_offset = 0;

    unsigned order() const { return static_cast<unsigned>(coeffs.size()) - 1; }
    bool is_constant() const;
    /// Throws std::invalid_argument on structural problems (p_d = 0, too few
    /// initial values, ...).
    void validate() const;
};

/// Builds the Eq. (1) form from a homogeneous sum q_d u_{n+d} + ... + q_0 u_n = 0.
Recurrence from_homogeneous(std::string name, const std::vector<UniPoly>& q, std::vector<Rational> initial);

/// Exact terms u_0, ..., u_{count-1}. Throws MissingData when a zero of p_d
/// is hit without a supplied value, std::invalid_argument when a supplied
/// value contradicts the recurrence.
std::vector<Rational> terms(const Recurrence& r, std::size_t count);

/// Nonnegative integer roots of p, increasing.
std::vector<Integer> nonnegative_integer_roots(const UniPoly& p);

struct Normalized {
    Recurrence rec;
    std::vector<Rational> prefix;  // u_0 .. u_{shift-1} of the original sequence
};

/// Shifts past every nonnegative integer zero of p_0 * p_d.
Normalized normalize_shift(const Recurrence& r);

/// U_{n+1} = A(n) U_n.
struct MatrixRecurrence {
    std::string name;
    RatFunMatrix A;
    Vec U0;
    unsigned shift_offset = 0;

    std::size_t dim() const { return U0.size(); }
};

/// Companion matrix form; last row (p_0/p_d, ..., p_{d-1}/p_d).
MatrixRecurrence companion(const Recurrence& r);

struct NotPoincare {
    std::string reason;
};

/// Entrywise limit as n -> infinity.
std::variant<Matrix, NotPoincare> limit_matrix(const RatFunMatrix& m);

/// U_0, ..., U_count.
std::vector<Vec> iterate(const MatrixRecurrence& m, std::size_t count);

struct NormalizedMatrix {
    MatrixRecurrence rec;
    std::vector<Vec> prefix;  // U_0 .. U_{shift-1}
};

/// Shifts past the nonnegative integer zeros of the denominator and of the
/// determinant numerator, so that A(n) is defined and invertible for n >= 0.
NormalizedMatrix normalize_shift(const MatrixRecurrence& m);

/// det(num(n)) as a polynomial in n.
UniPoly determinant_numerator(const RatFunMatrix& m);

}  // namespace conecert
