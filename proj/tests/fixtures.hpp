#pragma once

#include "conecert/io.hpp"
#include "oracle.hpp"

#include <string>
#include <vector>

namespace fixtures {

using namespace conecert;

inline Recurrence load_scalar(const std::string& rel) { return load_problem(oracle::data_path(rel)).recurrence; }

inline std::vector<std::vector<mpq_class>> oracle_coeffs(const Recurrence& r) {
    std::vector<std::vector<mpq_class>> p;
    for (const auto& c : r.coeffs) p.push_back(c.coeffs());
    return p;
}

inline std::vector<mpq_class> oracle_terms(const Recurrence& r, std::size_t count) {
    return oracle::terms(oracle_coeffs(r), r.initial, count);
}

/// The 3-digit eigenbasis T printed for GRZ k = 4 (columns v1, v2, v3, conj v3).
inline RationalBasis grz3_basis() {
    auto q = [](const char* re, const char* im = "0") { return QComplex(parse_rational(re), parse_rational(im)); };
    RationalBasis t;
    t.digits = 3;
    t.conj = {-1, -1, 3, 2};
    t.root = {0, 1, 2, 3};
    t.cols = {{q("1"), q("130"), q("16800"), q("2180000")},
              {q("1"), q("421/10"), q("1770"), q("74800")},
              {q("1"), q("-6", "54/11"), q("58/5", "-298/5"), q("225", "416")},
              {q("1"), q("-6", "-54/11"), q("58/5", "298/5"), q("225", "-416")}};
    return t;
}

inline Cone grz3_cone(ConeKind kind, const Rational& beta) {
    std::vector<unsigned> orders{1, kind == ConeKind::Vandergraft ? 0u : 2u};
    return with_beta(make_cone(kind, PositivityMode::LastCoordinate, grz3_basis(), orders, Rational(0)), beta);
}

/// Exact stability check of a polyhedral cone at one n: A(n) g in K for all generators g.
inline bool maps_generators_into(const Cone& c, const Matrix& an) {
    for (const auto& g : generator_coordinates(c)) {
        Vec gc;
        for (const auto& x : g) gc.push_back(*x.as_rational());
        if (!membership(c, an * (c.R * gc))) return false;
    }
    return true;
}

}  // namespace fixtures
