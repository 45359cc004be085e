#include "conecert/prover.hpp"

#include <algorithm>

namespace conecert {

std::string to_string(InconclusiveReason r) {
    return r == InconclusiveReason::IterationCapReached ? "IterationCapReached" : "PrecisionCapReached";
}

std::string to_string(UnsupportedReason r) {
    switch (r) {
        case UnsupportedReason::NotPoincare: return "NotPoincare";
        case UnsupportedReason::NoUniqueSimpleDominant: return "NoUniqueSimpleDominant";
        case UnsupportedReason::DominantNotRealPositiveOrNegative: return "DominantNotRealPositiveOrNegative";
        case UnsupportedReason::EigenvectorZeroCoordinate: return "EigenvectorZeroCoordinate";
        case UnsupportedReason::DerogatoryLimitMatrix: return "DerogatoryLimitMatrix";
    }
    return "?";
}

std::string verdict_name(const Verdict& v) {
    static const char* names[] = {"Positive", "NonPositive", "Inconclusive", "Unsupported"};
    return names[v.index()];
}

int exit_code(const Verdict& v) {
    if (std::holds_alternative<Positive>(v)) return 0;
    if (std::holds_alternative<NonPositive>(v)) return 1;
    return 2;
}

namespace {

std::vector<unsigned> digit_schedule(const ProveOptions& o) {
    std::vector<unsigned> out;
    for (unsigned d : o.digits)
        if (d > 0 && d <= o.max_digits && (out.empty() || d > out.back())) out.push_back(d);
    if (out.empty()) out.push_back(std::max(1u, o.max_digits));
    while (out.back() * 2 <= o.max_digits) out.push_back(out.back() * 2);
    if (out.back() < o.max_digits) out.push_back(o.max_digits);
    return out;
}

// Coordinates whose sign is the subject of the proof.
std::vector<std::size_t> watched(PositivityMode mode, std::size_t d) {
    std::vector<std::size_t> out;
    if (mode == PositivityMode::LastCoordinate) {
        out.push_back(d - 1);
    } else {
        for (std::size_t i = 0; i < d; ++i) out.push_back(i);
    }
    return out;
}

struct Built {
    Cone cone;
    StabilityWitness witness;
    unsigned digits = 0;
};

// Outcome of the spectral stage: a cone, or a verdict-free instruction to
// scan for a negative entry, or a final verdict.
struct ScanOnly {
    std::string why;
};
using Stage = std::variant<Built, ScanOnly, Inconclusive, Unsupported>;

Stage build_certified_cone(const RatFunMatrix& a, PositivityMode mode, const ProveOptions& o) {
    auto lim_or = limit_matrix(a);
    if (auto* np = std::get_if<NotPoincare>(&lim_or)) return Unsupported{UnsupportedReason::NotPoincare, np->reason};
    const Matrix lim = std::get<Matrix>(lim_or);

    SpectralData s = analyze(lim);
    const bool nilpotent = std::all_of(s.roots.begin(), s.roots.end(), [](const Root& r) {
        auto q = r.value.to_rational();
        return q && *q == 0;
    });
    if (nilpotent)
        return Unsupported{UnsupportedReason::DominantNotRealPositiveOrNegative, "the limit matrix is nilpotent"};
    if (s.dominance == Dominance::NotUniqueOrNotSimple)
        return Unsupported{UnsupportedReason::NoUniqueSimpleDominant,
                           "several eigenvalues of maximal modulus or a multiple dominant eigenvalue"};
    if (s.dominance == Dominance::UniqueSimpleNegative) return ScanOnly{"negative dominant eigenvalue"};

    ConeKind kind = o.kind.value_or(ConeKind::Polyhedral);
    std::vector<unsigned> root_orders;
    if (kind == ConeKind::Polyhedral) {
        auto sel = select_norm_orders(s, o.s_max);
        if (auto* no = std::get_if<NoPolyhedral>(&sel)) {
            if (o.kind) return Inconclusive{InconclusiveReason::PrecisionCapReached, "no polyhedral cone: " + no->reason};
            kind = ConeKind::Vandergraft;
        } else {
            root_orders = std::get<std::vector<unsigned>>(sel);
        }
    }
    if (kind == ConeKind::Vandergraft) {
        root_orders.assign(s.roots.size(), 1);
        for (std::size_t i = 0; i < s.roots.size(); ++i)
            if (!s.roots[i].value.is_real()) root_orders[i] = 0;
    }
    std::vector<unsigned> gap_orders = root_orders;
    if (kind == ConeKind::Vandergraft) std::fill(gap_orders.begin(), gap_orders.end(), 0u);
    const Rational gap = gap_lower_bound(s, gap_orders);
    if (gap <= 0) return Inconclusive{InconclusiveReason::PrecisionCapReached, "could not separate the dominant eigenvalue"};
    const Rational eps = gap / 2;

    JordanBasis jb;
    try {
        jb = build_basis(lim, s, eps);
    } catch (const BasisFailure& e) {
        return Unsupported{UnsupportedReason::DerogatoryLimitMatrix, e.what()};
    }
    const auto signs = dominant_signs(s, jb);
    for (std::size_t i : watched(mode, lim.rows())) {
        if (signs[i] == 0)
            return Unsupported{UnsupportedReason::EigenvectorZeroCoordinate,
                               "coordinate " + std::to_string(i + 1) + " of the dominant eigenvector is zero"};
        if (signs[i] < 0) return ScanOnly{"dominant eigenvector has coordinates of both signs"};
    }

    std::string last_failure = "no precision tried";
    for (unsigned digits : digit_schedule(o)) {
        try {
            RationalBasis rb = rationalize(s, jb, digits);
            Cone draft = make_cone(kind, mode, rb, slot_orders(rb, root_orders), eps);
            Cone cone = rescale_positive(draft);
            if (!check_contraction(cone, lim)) {
                last_failure = "cone not contracted at " + std::to_string(digits) + " digits";
                continue;
            }
            StabilityWitness w = stability_index(cone, a);
            return Built{std::move(cone), std::move(w), digits};
        } catch (const BasisFailure& e) {
            last_failure = e.what();
        } catch (const RescaleFailure& e) {
            last_failure = e.what();
        } catch (const LeadingCoefficientNotPositive& e) {
            last_failure = e.what();
        }
    }
    return Inconclusive{InconclusiveReason::PrecisionCapReached, last_failure};
}

std::optional<std::size_t> first_negative(const Vec& u, PositivityMode mode) {
    for (std::size_t i : watched(mode, u.size()))
        if (u[i] < 0) return i;
    return std::nullopt;
}

// Walks U_i of the normalized recurrence. With a cone, stops at the first
// i >= m with U_i in the cone.
struct Walk {
    std::optional<NonPositive> negative;
    std::optional<std::size_t> entry;
};

Walk walk(const MatrixRecurrence& m, PositivityMode mode, const Cone* cone, const Integer& stab, std::size_t cap) {
    Walk out;
    Vec u = m.U0;
    for (std::size_t i = 0; i <= cap; ++i) {
        if (auto k = first_negative(u, mode)) {
            out.negative = NonPositive{Integer(static_cast<unsigned long>(i)), *k, u[*k]};
            return out;
        }
        if (cone && Integer(static_cast<unsigned long>(i)) >= stab && membership(*cone, u)) {
            out.entry = i;
            return out;
        }
        if (i == cap) break;
        u = m.A.eval(Rational(static_cast<long>(i))) * u;
    }
    return out;
}

// In the scalar case U_i = (u_i, ..., u_{i+d-1}); the first negative term
// found at step i, coordinate k is u_{i+k} and every earlier term was seen.
NonPositive scalar_witness(const NonPositive& v, unsigned shift) {
    NonPositive out = v;
    out.index = v.index + v.coordinate + shift;
    out.coordinate = 0;
    return out;
}

}  // namespace

Verdict prove_scalar(const Recurrence& r, const ProveOptions& opts) {
    const Normalized norm = normalize_shift(r);
    for (std::size_t i = 0; i < norm.prefix.size(); ++i)
        if (norm.prefix[i] < 0) return NonPositive{Integer(static_cast<unsigned long>(i)), 0, norm.prefix[i]};
    const unsigned shift = static_cast<unsigned>(norm.prefix.size());
    const MatrixRecurrence mrec = companion(norm.rec);
    const std::size_t d = mrec.dim();
    const PositivityMode mode = opts.mode.value_or(PositivityMode::LastCoordinate);

    Stage st = build_certified_cone(mrec.A, mode, opts);
    if (auto* u = std::get_if<Unsupported>(&st)) return *u;
    if (auto* ic = std::get_if<Inconclusive>(&st)) return *ic;
    // every term is a coordinate of some U_i; scan all of them
    const PositivityMode scan_mode = PositivityMode::FullOrthant;
    if (auto* so = std::get_if<ScanOnly>(&st)) {
        Walk w = walk(mrec, scan_mode, nullptr, Integer(0), opts.max_iter);
        if (w.negative) return scalar_witness(*w.negative, shift);
        return Inconclusive{InconclusiveReason::IterationCapReached, so->why + "; no negative term found"};
    }
    Built& b = std::get<Built>(st);
    Walk w = walk(mrec, scan_mode, &b.cone, b.witness.m, opts.max_iter);
    if (w.negative) return scalar_witness(*w.negative, shift);
    if (!w.entry) return Inconclusive{InconclusiveReason::IterationCapReached, "the iterates did not enter the cone"};

    Certificate c;
    c.scalar = true;
    c.recurrence = r;
    c.shift = shift;
    c.cone = b.cone;
    c.stability_index = b.witness.m + shift;
    c.m0 = b.witness.m0 + shift;
    c.entry_index = Integer(static_cast<unsigned long>(*w.entry + shift));
    c.prefix = terms(r, shift + *w.entry + d);
    return Positive{std::move(c), std::move(b.witness), b.digits};
}

Verdict prove_matrix(const MatrixRecurrence& m, const ProveOptions& opts) {
    const PositivityMode mode = opts.mode.value_or(PositivityMode::FullOrthant);
    const NormalizedMatrix norm = normalize_shift(m);
    for (std::size_t i = 0; i < norm.prefix.size(); ++i)
        if (auto k = first_negative(norm.prefix[i], mode))
            return NonPositive{Integer(static_cast<unsigned long>(i)), *k, norm.prefix[i][*k]};
    const unsigned shift = static_cast<unsigned>(norm.prefix.size());

    Stage st = build_certified_cone(norm.rec.A, mode, opts);
    if (auto* u = std::get_if<Unsupported>(&st)) return *u;
    if (auto* ic = std::get_if<Inconclusive>(&st)) return *ic;
    auto shifted = [shift](NonPositive v) {
        v.index += shift;
        return v;
    };
    if (auto* so = std::get_if<ScanOnly>(&st)) {
        Walk w = walk(norm.rec, mode, nullptr, Integer(0), opts.max_iter);
        if (w.negative) return shifted(*w.negative);
        return Inconclusive{InconclusiveReason::IterationCapReached, so->why + "; no negative coordinate found"};
    }
    Built& b = std::get<Built>(st);
    Walk w = walk(norm.rec, mode, &b.cone, b.witness.m, opts.max_iter);
    if (w.negative) return shifted(*w.negative);
    if (!w.entry) return Inconclusive{InconclusiveReason::IterationCapReached, "the iterates did not enter the cone"};

    Certificate c;
    c.scalar = false;
    c.matrix = m;
    c.shift = shift;
    c.cone = b.cone;
    c.stability_index = b.witness.m + shift;
    c.m0 = b.witness.m0 + shift;
    c.entry_index = Integer(static_cast<unsigned long>(*w.entry + shift));
    c.vector_prefix = iterate(m, shift + *w.entry);
    return Positive{std::move(c), std::move(b.witness), b.digits};
}

namespace {

CheckResult fail(std::string why) { return CheckResult{false, std::move(why)}; }

}  // namespace

CheckResult check_certificate(const Certificate& c) {
    if (c.version != kCertificateVersion) return fail("unsupported certificate version '" + c.version + "'");
    if (c.entry_index < 0 || c.stability_index < 0 || c.m0 < 0) return fail("negative index");
    if (!c.entry_index.fits_ulong_p()) return fail("entry index out of range");

    RatFunMatrix a;
    std::size_t d = 0;
    try {
        if (c.scalar) {
            const Normalized norm = normalize_shift(c.recurrence);
            if (norm.prefix.size() != c.shift) return fail("normalization shift does not match");
            a = companion(norm.rec).A;
            d = c.recurrence.order();
        } else {
            const NormalizedMatrix norm = normalize_shift(c.matrix);
            if (norm.prefix.size() != c.shift) return fail("normalization shift does not match");
            a = norm.rec.A;
            d = c.matrix.dim();
        }
    } catch (const std::exception& e) {
        return fail(std::string("invalid recurrence: ") + e.what());
    }

    Cone cone = c.cone;
    try {
        cone.prepare();
    } catch (const std::exception& e) {
        return fail(std::string("malformed cone: ") + e.what());
    }
    if (cone.dim() != d) return fail("cone dimension does not match the recurrence order");
    if (!positivity_holds(cone)) return fail("cone is not contained in the required orthant");

    auto lim_or = limit_matrix(a);
    if (!std::holds_alternative<Matrix>(lim_or)) return fail("recurrence is not of Poincare type");
    if (!check_contraction(cone, std::get<Matrix>(lim_or))) return fail("cone is not contracted by the limit matrix");

    StabilityWitness w;
    try {
        w = stability_index(cone, a);
    } catch (const LeadingCoefficientNotPositive& e) {
        return fail(std::string("stability bound fails: ") + e.what());
    }
    if (c.stability_index < w.m + c.shift) return fail("stability index below the recomputed bound");
    if (c.m0 < w.m0 + c.shift) return fail("denominator threshold below the recomputed value");
    if (c.stability_index < c.m0) return fail("stability index below the denominator threshold");
    if (c.entry_index < c.stability_index) return fail("entry index below the stability index");

    const std::size_t n0 = c.entry_index.get_ui();
    Vec entry;
    if (c.scalar) {
        if (c.prefix.size() != n0 + d) return fail("prefix length does not match the entry index");
        std::vector<Rational> exact;
        try {
            exact = terms(c.recurrence, n0 + d);
        } catch (const std::exception& e) {
            return fail(std::string("cannot recompute the prefix: ") + e.what());
        }
        for (std::size_t i = 0; i < exact.size(); ++i) {
            if (exact[i] != c.prefix[i]) return fail("prefix term " + std::to_string(i) + " differs from the recurrence");
            if (exact[i] < 0) return fail("prefix term " + std::to_string(i) + " is negative");
        }
        entry.assign(exact.begin() + static_cast<long>(n0), exact.end());
    } else {
        if (c.vector_prefix.size() != n0 + 1) return fail("prefix length does not match the entry index");
        const auto exact = iterate(c.matrix, n0);
        for (std::size_t i = 0; i < exact.size(); ++i) {
            if (exact[i] != c.vector_prefix[i]) return fail("prefix vector " + std::to_string(i) + " differs from the recurrence");
            for (std::size_t k : watched(cone.mode, d))
                if (exact[i][k] < 0) return fail("prefix vector " + std::to_string(i) + " has a negative coordinate");
        }
        entry = exact.back();
    }
    if (!membership(cone, entry)) return fail("entry vector not in cone");
    return CheckResult{true, ""};
}

}  // namespace conecert
