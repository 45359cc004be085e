#pragma once

#include "conecert/prover.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace conecert {

using Json = nlohmann::json;

/// Malformed input; the message starts with the offending field path.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Contents of a recurrence file: a scalar recurrence or a matrix recurrence.
struct Problem {
    bool scalar = true;
    Recurrence recurrence;
    MatrixRecurrence matrix;

    const std::string& name() const { return scalar ? recurrence.name : matrix.name; }
    std::size_t order() const { return scalar ? recurrence.order() : matrix.dim(); }
};

/// Scalar: {"name", "order", "form": "eq1"|"homogeneous", "coefficients":
/// [p_0, ..., p_d], "initial": [...]}, each p_i a list of coefficients in
/// increasing powers of n. "eq1" means p_d u_{n+d} = p_{d-1} u_{n+d-1} + ...
/// + p_0 u_n; "homogeneous" means p_d u_{n+d} + ... + p_0 u_n = 0.
/// Matrix: {"type": "matrix", "name", "numerators": [[poly]], "denominator":
/// poly, "initial": [...]}. Rationals are integers or strings "p/q".
Problem problem_from_json(const Json& j);
Json to_json(const Problem& p);
Problem load_problem(const std::string& path);

Json to_json(const Recurrence& r);
Json to_json(const MatrixRecurrence& m);

Json to_json(const Cone& c);
Cone cone_from_json(const Json& j);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);
Certificate load_certificate(const std::string& path);

Json to_json(const StabilityWitness& w);
Json to_json(const Verdict& v);

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& where);

}  // namespace conecert
