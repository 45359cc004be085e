#include "conecert/recurrence.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace conecert;

namespace {

Recurrence rec(std::vector<UniPoly> c, std::vector<Rational> init) {
    Recurrence r;
    r.name = "t";
    r.coeffs = std::move(c);
    r.initial = std::move(init);
    return r;
}

UniPoly rand_poly(int deg, long range) {
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.push_back(Rational(oracle::rand_int(-range, range)));
    return UniPoly(c);
}

}  // namespace

TEST(Recurrence, Fibonacci) {
    Recurrence f = rec({UniPoly{1}, UniPoly{1}, UniPoly{1}}, {0, 1});
    auto u = terms(f, 30);
    EXPECT_EQ(u[29], 514229);
    EXPECT_TRUE(f.is_constant());
}

TEST(Recurrence, TermsMatchOracle) {
    for (const char* rel : {"pfinite/example3.json", "pfinite/straub_zudilin.json", "pfinite/apery.json",
                            "pfinite/grz4.json", "pfinite/u_n.json"}) {
        Recurrence r = fixtures::load_scalar(rel);
        normalize_shift(r);  // must not throw
        auto mine = terms(r, 200);
        auto ref = fixtures::oracle_terms(r, 200);
        ASSERT_EQ(mine, ref) << rel;
    }
}

TEST(Recurrence, Homogeneous) {
    // u_{n+2} - 3 u_{n+1} + 2 u_n = 0  ->  u_{n+2} = 3 u_{n+1} - 2 u_n
    Recurrence r = from_homogeneous("h", {UniPoly{2}, UniPoly{-3}, UniPoly{1}}, {1, 3});
    EXPECT_EQ(r.coeffs[0], UniPoly{-2});
    EXPECT_EQ(r.coeffs[1], UniPoly{3});
    auto u = terms(r, 6);
    EXPECT_EQ(u[5], 63);
}

TEST(Recurrence, ZeroOfLeadingCoefficient) {
    // (n - 2) u_{n+1} = (n - 1) u_n : p_1(2) = 0, so u_3 must be supplied
    Recurrence r = rec({UniPoly{-1, 1}, UniPoly{-2, 1}}, {1});
    EXPECT_THROW(terms(r, 5), MissingData);
    r.initial = {1, 2, 1, 7};
    // u_1 = (-1)/(-2) u_0 = 1/2 contradicts the supplied 2
    EXPECT_THROW(terms(r, 5), std::invalid_argument);
    r.initial = {1, Rational(1, 2), 0, 7};
    auto u = terms(r, 6);
    EXPECT_EQ(u[3], 7);
    EXPECT_EQ(u[4], 14);
}

TEST(Recurrence, NormalizeShift) {
    // p_0 = n - 3, p_1 = n + 1: p_0 vanishes at 3
    Recurrence r = rec({UniPoly{-3, 1}, UniPoly{1, 1}}, {5});
    EXPECT_EQ(nonnegative_integer_roots(UniPoly{-3, 1} * UniPoly{1, 1}), std::vector<Integer>{3});
    Normalized nr = normalize_shift(r);
    EXPECT_EQ(nr.rec.shift_offset, 4u);
    ASSERT_EQ(nr.prefix.size(), 4u);
    auto full = terms(r, 10);
    auto shifted = terms(nr.rec, 6);
    for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(shifted[i], full[i + 4]);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(nr.prefix[i], full[i]);
}

TEST(Recurrence, ValidateRejects) {
    EXPECT_THROW(rec({UniPoly{1}, UniPoly{}}, {1}).validate(), std::invalid_argument);
    EXPECT_THROW(rec({UniPoly{1}, UniPoly{1}, UniPoly{1}}, {1}).validate(), std::invalid_argument);
}

TEST(Recurrence, LimitMatrix) {
    Recurrence np = fixtures::load_scalar("unsupported/not_poincare.json");
    EXPECT_TRUE(std::holds_alternative<NotPoincare>(limit_matrix(companion(np).A)));
    Recurrence sz = fixtures::load_scalar("pfinite/straub_zudilin.json");
    auto lim = limit_matrix(companion(normalize_shift(sz).rec).A);
    ASSERT_TRUE(std::holds_alternative<Matrix>(lim));
    const Matrix& a = std::get<Matrix>(lim);
    // 2 s_{n+2} ~ 81 s_{n+1} - 81 * 9 s_n
    EXPECT_EQ(a(1, 1), Rational(81, 2));
    EXPECT_EQ(a(1, 0), Rational(-729, 2));
}

// Property: the companion iteration reproduces the scalar terms.
TEST(RecurrenceProperty, ScalarMatrixConsistency) {
    for (int trial = 0; trial < 40; ++trial) {
        const int d = static_cast<int>(oracle::rand_int(1, 4));
        std::vector<UniPoly> c;
        for (int i = 0; i < d; ++i) c.push_back(rand_poly(static_cast<int>(oracle::rand_int(0, 2)), 6));
        if (c[0].is_zero()) c[0] = UniPoly{1};
        // leading coefficient without nonnegative integer roots
        c.push_back(UniPoly{Rational(oracle::rand_int(1, 5)), Rational(oracle::rand_int(0, 3)), Rational(1)});
        std::vector<Rational> init;
        for (int i = 0; i < d; ++i) init.push_back(oracle::rand_rational(9, 4));
        Recurrence r = rec(c, init);
        Normalized nr = normalize_shift(r);
        auto u = terms(r, 60);
        ASSERT_EQ(u, fixtures::oracle_terms(r, 60));
        MatrixRecurrence m = companion(nr.rec);
        auto vs = iterate(m, 40);
        ASSERT_EQ(vs.size(), 41u);
        for (std::size_t n = 0; n <= 40; ++n)
            for (int i = 0; i < d; ++i) ASSERT_EQ(vs[n][i], u[n + nr.rec.shift_offset + i]);
    }
}

TEST(Recurrence, MatrixNormalizeShift) {
    Problem p = load_problem(oracle::data_path("matrix/perturbed_2x2.json"));
    ASSERT_FALSE(p.scalar);
    // det num = 4(n+1)^2 - (n+2)(n+1) = (n+1)(3n+2)
    EXPECT_EQ(determinant_numerator(p.matrix.A), (UniPoly{1, 1} * UniPoly{2, 3}));
    NormalizedMatrix nm = normalize_shift(p.matrix);
    EXPECT_EQ(nm.rec.shift_offset, 0u);
    auto vs = iterate(nm.rec, 3);
    Vec u1 = p.matrix.A.eval(Rational(0)) * p.matrix.U0;
    EXPECT_EQ(vs[1], u1);

    MatrixRecurrence z;
    z.A.num = {{UniPoly{-2, 1}, UniPoly{0}}, {UniPoly{0}, UniPoly{1}}};
    z.U0 = {1, 1};
    NormalizedMatrix nz = normalize_shift(z);
    EXPECT_EQ(nz.rec.shift_offset, 3u);
    EXPECT_EQ(nz.prefix.size(), 3u);
}
