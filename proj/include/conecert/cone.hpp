#pragma once

#include "conecert/multipoly.hpp"
#include "conecert/number_field.hpp"
#include "conecert/spectral.hpp"

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace conecert {

enum class ConeKind { Vandergraft, Polyhedral };
enum class PositivityMode { FullOrthant, LastCoordinate };

std::string to_string(ConeKind k);
std::string to_string(PositivityMode m);
ConeKind parse_cone_kind(const std::string& s);
PositivityMode parse_positivity_mode(const std::string& s);

/// A non-dominant coordinate block: one real coefficient a_r, or the pair
/// (x, y) = (2 Re a, -2 Im a) of a conjugate pair of basis columns.
struct Slot {
    bool complex = false;
    std::size_t column = 0;  // basis column (upper member of a pair)
    std::size_t coord = 0;   // first real-form coordinate
    unsigned order = 1;      // polygon order; 1 for real slots, 0 for Vandergraft pairs
};

/// Cone spanned by a rational basis: W = R c with real-form coordinates
/// c = (a11, slots...). Vandergraft: a11 >= |a_r|, a11^2 >= |a_pair|^2.
/// Polyhedral: a11 >= ||a_pair||_{P_s}.
struct Cone {
    ConeKind kind = ConeKind::Polyhedral;
    PositivityMode mode = PositivityMode::FullOrthant;
    RationalBasis basis;          // column 0 already multiplied by beta
    Rational beta = 1;
    Rational eps;                 // eps of the chain relations (informational)
    std::vector<unsigned> orders; // one per slot

    // Filled by prepare().
    std::vector<Slot> slots;
    Matrix R, Rinv;
    const NumberField* field = nullptr;

    std::size_t dim() const { return basis.dim(); }
    std::size_t real_slots() const;
    std::size_t complex_slots() const;
    /// Validates the data and computes the derived members. Throws
    /// std::invalid_argument on a malformed cone.
    void prepare();
};

/// Per-slot orders from per-eigenvalue orders (indexed like SpectralData::roots).
std::vector<unsigned> slot_orders(const RationalBasis& b, const std::vector<unsigned>& root_orders);

/// Number of slots of a basis (non-dominant real columns plus conjugate pairs).
std::size_t slot_count(const RationalBasis& b);

Cone make_cone(ConeKind kind, PositivityMode mode, RationalBasis basis, std::vector<unsigned> orders,
               const Rational& eps);

/// Same cone with column 0 rescaled so that the total factor is beta.
Cone with_beta(const Cone& c, const Rational& beta);

/// Linear constraint sum coef_i c_i >= 0 on real-form coordinates.
struct LinearConstraint {
    std::string label;
    std::vector<FieldElem> coef;
};

/// All linear defining inequalities (for Vandergraft cones: a11 >= 0 and the
/// real slots; the conjugate pairs give quadratic constraints instead).
std::vector<LinearConstraint> linear_constraints(const Cone& c);

/// Real-form coordinates R^{-1} W.
Vec coordinates(const Cone& c, const Vec& w);

bool membership(const Cone& c, const Vec& w);
/// Every defining inequality holds strictly.
bool in_interior(const Cone& c, const Vec& w);

/// Extremal generators normalized to a11 = 1.
struct ExtremalSet {
    ConeKind kind = ConeKind::Polyhedral;
    Integer count;  // 2^r * prod(2 s_i) for polyhedral cones, 0 for the Vandergraft family
    std::vector<std::vector<FieldElem>> coords;   // polyhedral: real-form coordinates
    std::vector<std::vector<FieldElem>> vectors;  // polyhedral: R c
    std::vector<MultiPoly> symbolic;              // Vandergraft: R c in the parameters
    std::vector<std::string> parameters;
};

/// Throws std::length_error when a polyhedral cone has more than limit generators.
ExtremalSet extremal_vectors(const Cone& c, std::size_t limit = 1u << 16);

Integer generator_count(const Cone& c);

/// Polyhedral generators as real-form coordinate vectors.
std::vector<std::vector<FieldElem>> generator_coordinates(const Cone& c, std::size_t limit = 1u << 16);

/// Exact minimum of h . c over the polyhedral generators c (separable per slot).
FieldElem min_over_generators(const Cone& c, const std::vector<FieldElem>& h);

/// Vandergraft generator c(params) as linear polynomials: a11 = 1, a_r = e_r,
/// x = 2 a_t, y = -2 b_t; the parameters lie on {+-1} and the unit circle.
std::vector<MultiPoly> symbolic_generator(const Cone& c);
std::vector<std::string> parameter_names(const Cone& c);
/// Rewrites e^2 -> 1 and b^2 -> 1 - a^2.
MultiPoly reduce_parameters(const Cone& c, const MultiPoly& p);

/// Every generator lies in the orthant required by the positivity mode.
bool positivity_holds(const Cone& c);

class RescaleFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Smallest power-of-two factor on column 0 (relative to the draft) for which
/// positivity_holds; beta = 1 when there are no slots.
Cone rescale_positive(const Cone& draft, int min_exp = -64, int max_exp = 64);

/// A maps every nonzero element of the cone into its interior (sufficient
/// test: exact for polyhedral cones, box bounds for Vandergraft cones).
bool check_contraction(const Cone& c, const Matrix& a);

struct NoPolyhedral {
    std::string reason;
};

/// Per-eigenvalue polygon orders (1 for real eigenvalues, entry 0 unused).
std::variant<std::vector<unsigned>, NoPolyhedral> select_norm_orders(const SpectralData& s, unsigned s_max = 12);

}  // namespace conecert
