#include "conecert/spectral.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace conecert;

namespace {

Matrix grz_limit() {
    Recurrence r = fixtures::load_scalar("pfinite/grz4.json");
    return std::get<Matrix>(limit_matrix(companion(normalize_shift(r).rec).A));
}

Matrix rand_matrix(std::size_t d, long range) {
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = Rational(oracle::rand_int(-range, range));
    return m;
}

std::vector<long double> ld_coeffs(const UniPoly& p) {
    std::vector<long double> c;
    for (const auto& x : p.coeffs()) c.push_back(oracle::to_ld(x));
    return c;
}

}  // namespace

TEST(Spectral, GrzEigenvalues) {
    Matrix a = grz_limit();
    SpectralData s = analyze(a);
    EXPECT_EQ(s.char_poly.monic(), (UniPoly{331776, 55296, 3456, -160, 1}));
    ASSERT_EQ(s.dominance, Dominance::UniqueSimplePositive);
    ASSERT_EQ(s.roots.size(), 4u);
    EXPECT_NEAR(s.roots[0].value.approx_re(), 129.9898, 1e-4);
    EXPECT_NEAR(s.roots[1].value.approx_re(), 42.0400, 1e-4);
    EXPECT_NEAR(s.roots[2].value.approx_re(), -6.0149, 1e-4);
    EXPECT_NEAR(std::fabs(s.roots[2].value.approx_im()), 4.9530, 1e-4);
    EXPECT_EQ(s.conjugate_of(2), 3);
    EXPECT_EQ(s.conjugate_of(3), 2);
    EXPECT_EQ(s.conjugate_of(1), -1);
}

TEST(Spectral, GrzBasis) {
    Matrix a = grz_limit();
    SpectralData s = analyze(a);
    ASSERT_TRUE(is_companion(a));
    JordanBasis b = build_basis(a, s, Rational(1, 10));
    EXPECT_TRUE(b.companion);
    ASSERT_EQ(b.columns.size(), 4u);
    EXPECT_TRUE(residuals_vanish(a, s, b));
    EXPECT_EQ(dominant_signs(s, b), (std::vector<int>{1, 1, 1, 1}));
    EXPECT_EQ(b.columns[2].conj, 3);
    RationalBasis t = rationalize(s, b, 3);
    ASSERT_EQ(t.dim(), 4u);
    EXPECT_EQ(t.conj, (std::vector<int>{-1, -1, 3, 2}));
    // V1 = (1, l1, l1^2, l1^3) to three decimals
    EXPECT_NEAR(to_double(t.cols[0][1].re), 129.9898, 2e-3);
    EXPECT_NEAR(to_double(t.cols[0][3].re), std::pow(129.98977, 3), 2.0);
    Matrix rf = real_form(t);
    EXPECT_NE(determinant(rf), 0);
}

TEST(Spectral, Dominance) {
    EXPECT_EQ(analyze(Matrix::from_rows({{0, 1}, {1, 0}})).dominance, Dominance::NotUniqueOrNotSimple);
    EXPECT_EQ(analyze(Matrix::from_rows({{0, 1}, {-2, 0}})).dominance, Dominance::NotUniqueOrNotSimple);
    EXPECT_EQ(analyze(Matrix::from_rows({{-2}})).dominance, Dominance::UniqueSimpleNegative);
    EXPECT_EQ(analyze(Matrix::from_rows({{3, 0}, {0, 3}})).dominance, Dominance::NotUniqueOrNotSimple);
    // 1 +- i has modulus sqrt 2 < 2
    EXPECT_EQ(analyze(Matrix::from_rows({{2, 0, 0}, {0, 1, -1}, {0, 1, 1}})).dominance,
              Dominance::UniqueSimplePositive);
}

TEST(Spectral, DerogatoryThrows) {
    Matrix a = Matrix::from_rows({{3, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    SpectralData s = analyze(a);
    ASSERT_EQ(s.dominance, Dominance::UniqueSimplePositive);
    EXPECT_THROW(build_basis(a, s, Rational(1, 10)), BasisFailure);
}

TEST(Spectral, JordanChain) {
    // eigenvalue 1 with a Jordan block of size 2 below the dominant 4
    Matrix a = Matrix::from_rows({{4, 0, 0}, {0, 1, 1}, {0, 0, 1}});
    SpectralData s = analyze(a);
    JordanBasis b = build_basis(a, s, Rational(1, 8));
    EXPECT_TRUE(residuals_vanish(a, s, b));
    ASSERT_EQ(b.columns.size(), 3u);
    EXPECT_EQ(b.columns[2].chain, 2u);
}

// Property: exact chain relations for random matrices, rationalization within
// 10^-digits of the exact entries, and sound gap bounds (oracle: Aberth).
TEST(SpectralProperty, ResidualsRationalizeGap) {
    int checked = 0;
    for (int trial = 0; trial < 60 && checked < 25; ++trial) {
        const std::size_t d = static_cast<std::size_t>(oracle::rand_int(2, 4));
        Matrix a = rand_matrix(d, 6);
        SpectralData s = analyze(a);
        if (s.dominance != Dominance::UniqueSimplePositive) continue;
        JordanBasis b;
        try {
            b = build_basis(a, s, Rational(1, 4));
        } catch (const BasisFailure&) {
            continue;
        }
        ASSERT_TRUE(residuals_vanish(a, s, b));
        for (unsigned digits : {3u, 8u}) {
            RationalBasis t = rationalize(s, b, digits);
            const Rational eps = decimal_eps(digits);
            for (std::size_t j = 0; j < d; ++j) {
                const auto& col = b.columns[j];
                for (std::size_t i = 0; i < d; ++i) {
                    ComplexInterval e = eval_enclosure(col.entries[i], s.roots[col.root].value, eps / 100);
                    ASSERT_LE(abs_of(t.cols[j][i].re - e.re.midpoint()), eps + eps / 100);
                    ASSERT_LE(abs_of(t.cols[j][i].im - e.im.midpoint()), eps + eps / 100);
                }
                if (col.conj >= 0)
                    for (std::size_t i = 0; i < d; ++i) ASSERT_EQ(t.cols[col.conj][i], t.cols[j][i].conj());
            }
        }
        auto z = oracle::roots(ld_coeffs(s.char_poly));
        long double l1 = 0, second = 0;
        for (const auto& w : z) l1 = std::max(l1, w.real());
        for (const auto& w : z)
            if (std::abs(w - oracle::cplx(l1)) > 1e-9L) second = std::max(second, std::abs(w));
        std::vector<unsigned> orders(s.roots.size(), 0);
        Rational g = gap_lower_bound(s, orders);
        EXPECT_GT(g, 0);
        if (d > 1 && z.size() > 1) EXPECT_LE(to_double(g), static_cast<double>(l1 - second) + 1e-9);
        ++checked;
    }
    EXPECT_GE(checked, 10);
}
