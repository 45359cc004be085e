#pragma once

#include "conecert/cone.hpp"
#include "conecert/recurrence.hpp"
#include "conecert/stability.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace conecert {

inline constexpr const char* kCertificateVersion = "conecert-cert/1";

enum class InconclusiveReason { IterationCapReached, PrecisionCapReached };
enum class UnsupportedReason {
    NotPoincare,
    NoUniqueSimpleDominant,
    DominantNotRealPositiveOrNegative,
    EigenvectorZeroCoordinate,
    DerogatoryLimitMatrix,
};

std::string to_string(InconclusiveReason r);
std::string to_string(UnsupportedReason r);

struct ProveOptions {
    std::optional<ConeKind> kind;        // empty: polyhedral, Vandergraft when no polygon order fits
    std::optional<PositivityMode> mode;  // empty: last coordinate for scalars, full orthant for matrices
    std::size_t max_iter = 100000;
    std::vector<unsigned> digits = {3, 6, 12, 24, 48, 60};
    unsigned max_digits = 60;
    unsigned s_max = 12;
};

/// Self-contained positivity proof. Indices refer to the original sequence.
struct Certificate {
    std::string version = kCertificateVersion;
    bool scalar = true;
    Recurrence recurrence;   // scalar source, as given
    MatrixRecurrence matrix; // matrix source, as given
    unsigned shift = 0;      // normalization shift
    Cone cone;               // for the normalized recurrence
    Integer stability_index; // m: A(n) K in K for n >= m
    Integer m0;
    Integer entry_index;     // n0 >= m with U_{n0} in K
    std::vector<Rational> prefix;     // scalar: u_0 .. u_{n0+d-1}
    std::vector<Vec> vector_prefix;   // matrix: U_0 .. U_{n0}
};

struct Positive {
    Certificate certificate;
    StabilityWitness witness;  // for the normalized recurrence
    unsigned digits = 0;
};

struct NonPositive {
    Integer index;              // first term (scalar) or vector index (matrix)
    std::size_t coordinate = 0; // matrix recurrences: offending coordinate
    Rational value;
};

struct Inconclusive {
    InconclusiveReason reason;
    std::string detail;
};

struct Unsupported {
    UnsupportedReason reason;
    std::string detail;
};

using Verdict = std::variant<Positive, NonPositive, Inconclusive, Unsupported>;

std::string verdict_name(const Verdict& v);
/// 0 Positive, 1 NonPositive, 2 Inconclusive or Unsupported.
int exit_code(const Verdict& v);

Verdict prove_scalar(const Recurrence& r, const ProveOptions& opts = {});
Verdict prove_matrix(const MatrixRecurrence& m, const ProveOptions& opts = {});

struct CheckResult {
    bool ok = false;
    std::string reason;

    explicit operator bool() const { return ok; }
};

/// Re-derives every claim of the certificate with exact arithmetic.
CheckResult check_certificate(const Certificate& c);

}  // namespace conecert
