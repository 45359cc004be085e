#include "conecert/prover.hpp"
#include "conecert/stability.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace conecert;

namespace {

MatrixRecurrence grz_matrix() {
    Recurrence r = fixtures::load_scalar("pfinite/grz4.json");
    return companion(normalize_shift(r).rec);
}

const InequalityPolynomial& by_label(const std::vector<InequalityPolynomial>& ps, const std::string& label) {
    for (const auto& p : ps)
        if (p.label == label) return p;
    throw std::runtime_error("no polynomial " + label);
}

Rational coeff(const MultiPoly& p, std::vector<unsigned> e) { return p.coeff(MultiPoly::Exponents(e.begin(), e.end())); }

// Parameter points of the Vandergraft family: e = +-1, (a, b) on the circle.
std::vector<std::vector<Rational>> family_points(const Cone& c, int count) {
    std::vector<std::vector<Rational>> pts;
    const std::size_t nv = parameter_names(c).size();
    for (int i = 0; i < count; ++i) {
        std::vector<Rational> pt;
        for (const auto& sl : c.slots) {
            if (!sl.complex) {
                pt.push_back(Rational(oracle::rand_int(0, 1) ? 1 : -1));
            } else {
                auto [a, b] = oracle::circle_point(oracle::rand_rational(30, 7));
                pt.push_back(a);
                pt.push_back(b);
            }
        }
        EXPECT_EQ(pt.size(), nv);
        pts.push_back(pt);
    }
    return pts;
}

Vec family_vector(const Cone& c, const std::vector<Rational>& pt) {
    Vec g{Rational(1)};
    std::size_t k = 0;
    for (const auto& sl : c.slots) {
        if (!sl.complex) {
            g.push_back(pt[k++]);
        } else {
            g.push_back(2 * pt[k]);
            g.push_back(-2 * pt[k + 1]);
            k += 2;
        }
    }
    return c.R * g;
}

// Exact: A(n) maps the (sampled) generators of c into c.
bool stable_at(const Cone& c, const RatFunMatrix& a, const Rational& n) {
    Matrix an = a.eval(n);
    if (c.kind == ConeKind::Polyhedral) return fixtures::maps_generators_into(c, an);
    for (const auto& pt : family_points(c, 24))
        if (!membership(c, an * family_vector(c, pt))) return false;
    return true;
}

// P~(n) <= P(n, params) at sample points, and P~(n) > 0 from the threshold on.
void check_bound_chain(const Cone& c, const RatFunMatrix& a) {
    StabilityWitness w = stability_index(c, a);
    std::size_t gens = c.kind == ConeKind::Polyhedral ? static_cast<std::size_t>(generator_count(c).get_ui()) : 1;
    std::size_t bi = 0;
    auto pts = c.kind == ConeKind::Vandergraft ? family_points(c, 12) : std::vector<std::vector<Rational>>{};
    for (std::size_t g = 0; g < gens && gens <= kPerGeneratorLimit; ++g) {
        for (const auto& p : inequality_polynomials(c, a, g)) {
            UniPoly lb = lower_bound_polynomial(p);
            ASSERT_LT(bi, w.bounds.size());
            const BoundPolynomial& b = w.bounds[bi++];
            EXPECT_EQ(b.bound, lb);
            EXPECT_LE(b.threshold, w.m);
            for (long n : {0L, 1L, 2L, 5L, 17L, 100L}) {
                const Rational rn(n);
                if (p.symbolic()) {
                    for (const auto& pt : pts) {
                        Rational val = 0, pw = 1;
                        for (const auto& ck : p.coeffs) {
                            val += ck.eval(pt) * pw;
                            pw *= rn;
                        }
                        ASSERT_LE(lb.eval(rn), val) << p.label << " n=" << n;
                    }
                } else {
                    FieldElem val(*c.field, Rational(0));
                    Rational pw = 1;
                    for (const auto& ck : p.field_coeffs) {
                        val += ck * pw;
                        pw *= rn;
                    }
                    ASSERT_GE((val - FieldElem(*c.field, lb.eval(rn))).sign(), 0) << p.label << " n=" << n;
                }
            }
            for (Integer n = b.threshold; n < b.threshold + 40; ++n) ASSERT_GT(lb.eval(Rational(n)), 0);
        }
    }
}

}  // namespace

// Leading coefficients of the GRZ k = 4 inequality polynomials for the printed
// basis with beta = 1/25: the a, b parts of alpha1 -+ alpha2 and the a^2, ab
// parts of alpha1^2 - |alpha3|^2 are the printed values.
TEST(Stability, Grz3LeadingCoefficients) {
    MatrixRecurrence m = grz_matrix();
    Cone c = fixtures::grz3_cone(ConeKind::Vandergraft, Rational(1, 25));
    auto ps = inequality_polynomials(c, m.A);
    ASSERT_EQ(parameter_names(c), (std::vector<std::string>{"e2", "a3", "b3"}));
    const MultiPoly& minus = by_label(ps, "a11-a2").coeffs.back();
    EXPECT_EQ(by_label(ps, "a11-a2").coeffs.size(), 7u);
    EXPECT_EQ(coeff(minus, {0, 1, 0}), -parse_rational("17478404684/728783020363"));
    EXPECT_EQ(coeff(minus, {0, 0, 1}), -parse_rational("943647073524/8016613223993"));
    const MultiPoly& plus = by_label(ps, "a11+a2").coeffs.back();
    EXPECT_EQ(coeff(plus, {0, 1, 0}), -parse_rational("74575443452/5101481142541"));
    EXPECT_EQ(coeff(plus, {0, 0, 1}), -parse_rational("2936449777372/56116292567951"));
    const auto& quad = by_label(ps, "quadratic(a3)");
    EXPECT_EQ(quad.coeffs.size(), 13u);
    EXPECT_EQ(coeff(quad.coeffs.back(), {0, 2, 0}), -parse_rational("1606389690866415174695257143/5725524166494313887186069820"));
    EXPECT_EQ(coeff(quad.coeffs.back(), {0, 1, 1}), parse_rational("6917145006021706588092982004/7156905208117892358982587275"));
    // reduced: no b^2 and no e^2
    for (const auto& ck : quad.coeffs) {
        EXPECT_LE(ck.degree_in(0), 1u);
        EXPECT_LE(ck.degree_in(2), 1u);
    }
}

// alpha1 + Re alpha3 + Im alpha3 for the polyhedral cone and the limit matrix:
// the printed linear form in (epsilon, a, b).
TEST(Stability, Grz3PolyhedralFacet) {
    Matrix a = std::get<Matrix>(limit_matrix(grz_matrix().A));
    Cone c = fixtures::grz3_cone(ConeKind::Polyhedral, Rational(1, 25));
    auto form = [&](const Rational& e, const Rational& ra, const Rational& rb) -> Rational {
        Vec co = coordinates(c, a * (c.R * Vec{Rational(1), e, 2 * ra, -2 * rb}));
        return co[0] + co[2] / 2 - co[3] / 2;
    };
    Rational k = form(0, 0, 0);
    EXPECT_EQ(k, parse_rational("473760971363066/3643915101815"));
    // printed as 1168800515801/457566040726; every other term has denominator 1457566040726
    EXPECT_EQ(form(1, 0, 0) - k, parse_rational("1168800515801/1457566040726"));
    EXPECT_EQ(form(0, 1, 0) - k, -parse_rational("1513887146713/1457566040726"));
    EXPECT_EQ(form(0, 0, 1) - k, -parse_rational("8043173512184/728783020363"));
}

// Exact oracle: A(n) g in K for every generator g holds from n = 2 on, and
// fails at n = 0 and n = 1, for both cone kinds built on the printed basis.
TEST(Stability, Grz3ConeIndexIsTwo) {
    MatrixRecurrence m = grz_matrix();
    for (ConeKind kind : {ConeKind::Vandergraft, ConeKind::Polyhedral}) {
        Cone c = fixtures::grz3_cone(kind, Rational(1, 25));
        StabilityWitness w = stability_index(c, m.A);
        EXPECT_EQ(w.m, 2) << to_string(kind);
        EXPECT_EQ(w.m0, 0);
        EXPECT_FALSE(stable_at(c, m.A, Rational(0))) << to_string(kind);
        EXPECT_FALSE(stable_at(c, m.A, Rational(1))) << to_string(kind);
        for (int n = 2; n < 12; ++n) EXPECT_TRUE(stable_at(c, m.A, Rational(n))) << to_string(kind) << " n=" << n;
        check_bound_chain(c, m.A);
    }
}

TEST(Stability, MonicDenominator) {
    RatFunMatrix a;
    a.num = {{UniPoly{2, 4}}};
    a.den = UniPoly{1, 2};
    RatFunMatrix b = monic_denominator(a);
    EXPECT_EQ(b.den, (UniPoly{Rational(1, 2), 1}));
    EXPECT_EQ(b.eval(Rational(3)), a.eval(Rational(3)));
}

TEST(Stability, ConstantRecurrenceIsDegenerate) {
    Recurrence f = fixtures::load_scalar("cfinite/fibonacci.json");
    auto v = prove_scalar(f);
    ASSERT_TRUE(std::holds_alternative<Positive>(v));
    const auto& p = std::get<Positive>(v);
    EXPECT_EQ(p.witness.m, 0);
    EXPECT_EQ(p.witness.m0, 0);
    check_bound_chain(p.certificate.cone, companion(normalize_shift(f).rec).A);
}

TEST(Stability, LeadingCoefficientNotPositive) {
    InequalityPolynomial p;
    p.label = "t";
    const NumberField& q = NumberField::rationals();
    p.field_coeffs = {FieldElem(q, Rational(5)), FieldElem(q, Rational(-1))};
    EXPECT_THROW(lower_bound_polynomial(p), LeadingCoefficientNotPositive);
    p.field_coeffs = {FieldElem(q, Rational(-5)), FieldElem(q, Rational(1))};
    UniPoly lb = lower_bound_polynomial(p);
    EXPECT_EQ(lb, (UniPoly{-5, 1}));
}

// Property: for cones produced by the prover on perturbed C-finite limits,
// the bound chain is sound and A(n) maps generators into K at n = m and
// n = m + 17 (exact membership).
TEST(StabilityProperty, RandomRecurrences) {
    int proved = 0;
    for (int trial = 0; trial < 200 && proved < 30; ++trial) {
        // limit polynomial (x - l)(x^2 + p x + q): complex or small real roots below l
        const long l = oracle::rand_int(4, 7), pp = oracle::rand_int(-2, 2), qq = oracle::rand_int(1, 3);
        const long c2 = pp - l, c1 = qq - l * pp, c0 = -l * qq;
        Recurrence r;
        r.name = "random";
        auto k = [] { return Rational(oracle::rand_int(-3, 3)); };
        r.coeffs = {UniPoly{k(), Rational(-c0)}, UniPoly{k(), Rational(-c1)}, UniPoly{k(), Rational(-c2)},
                    UniPoly{Rational(oracle::rand_int(1, 4)), Rational(1)}};
        r.initial = {Rational(1), Rational(l), Rational(l * l)};
        ProveOptions opts;
        opts.kind = trial % 2 ? ConeKind::Vandergraft : ConeKind::Polyhedral;
        opts.max_iter = 2000;
        Verdict v = prove_scalar(r, opts);
        if (!std::holds_alternative<Positive>(v)) continue;
        const auto& pos = std::get<Positive>(v);
        const Cone& c = pos.certificate.cone;
        RatFunMatrix a = companion(normalize_shift(r).rec).A;
        const Integer m = pos.witness.m;
        ASSERT_TRUE(stable_at(c, a, Rational(m)));
        ASSERT_TRUE(stable_at(c, a, Rational(m + 17)));
        check_bound_chain(c, a);
        ++proved;
    }
    EXPECT_EQ(proved, 30);
}
