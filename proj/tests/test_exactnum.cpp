#include "conecert/multipoly.hpp"
#include "conecert/number_field.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace conecert;

namespace {

Rational q(const char* s) { return parse_rational(s); }

RatInterval rand_interval() {
    Rational a = oracle::rand_rational(50, 9), b = oracle::rand_rational(50, 9);
    return a <= b ? RatInterval(a, b) : RatInterval(b, a);
}

Rational rand_member(const RatInterval& x) {
    Rational t(oracle::rand_int(0, 16), 16);
    return x.lo + t * (x.hi - x.lo);
}

}  // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(q("-0.25"), Rational(-1, 4));
    EXPECT_EQ(q("6/4"), Rational(3, 2));
    EXPECT_EQ(to_string(Rational(3, 2)), "3/2");
    EXPECT_EQ(to_string(Rational(-7)), "-7");
    EXPECT_THROW(q("1/0"), ParseError);
    EXPECT_THROW(q("abc"), ParseError);
    EXPECT_THROW(q(""), ParseError);
    for (int i = 0; i < 200; ++i) {
        Rational x = oracle::rand_rational(100000, 1000);
        EXPECT_EQ(q(to_string(x).c_str()), x);
    }
}

TEST(Rational, FloorCeilPow) {
    EXPECT_EQ(floor_of(Rational(-7, 2)), -4);
    EXPECT_EQ(ceil_of(Rational(-7, 2)), -3);
    EXPECT_EQ(floor_of(Rational(4)), 4);
    EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
    EXPECT_EQ(binomial(10, 3), 120);
    EXPECT_EQ(decimal_eps(3), Rational(1, 1000));
}

TEST(Rational, SimplestBetween) {
    EXPECT_EQ(simplest_between(Rational(1, 3), Rational(1, 2)), Rational(1, 2));
    EXPECT_EQ(simplest_between(q("0.3"), q("0.34")), Rational(1, 3));
    EXPECT_EQ(simplest_between(q("2.5"), q("3.5")), Rational(3));
    EXPECT_EQ(simplest_between(q("-0.34"), q("-0.3")), Rational(-1, 3));
    EXPECT_EQ(simplest_between(q("-1/2"), q("1/2")), Rational(0));
    // oracle: brute force over denominators
    for (int i = 0; i < 100; ++i) {
        Rational lo = oracle::rand_rational(200, 60), hi = lo + Rational(oracle::rand_int(1, 40), 997);
        Rational s = simplest_between(lo, hi);
        ASSERT_TRUE(lo <= s && s <= hi);
        for (long den = 1; den < s.get_den().get_si(); ++den) {
            Integer k = ceil_of(lo * den);
            ASSERT_FALSE(Rational(k, den) <= hi) << "smaller denominator " << den << " fits";
        }
    }
}

TEST(Rational, SqrtBounds) {
    for (long v : {2L, 3L, 5L, 10L, 12345L}) {
        Rational lo = sqrt_lower(Rational(v), 64), hi = sqrt_upper(Rational(v), 64);
        EXPECT_LE(lo * lo, v);
        EXPECT_GE(hi * hi, v);
        EXPECT_LE(hi - lo, Rational(1, Integer(1) << 63));
    }
    EXPECT_EQ(sqrt_lower(Rational(9, 4), 10), Rational(3, 2));
}

// Property: interval operations enclose the exact result on members.
TEST(IntervalProperty, Soundness) {
    for (int i = 0; i < 400; ++i) {
        RatInterval a = rand_interval(), b = rand_interval();
        Rational x = rand_member(a), y = rand_member(b);
        ASSERT_TRUE((a + b).contains(x + y));
        ASSERT_TRUE((a - b).contains(x - y));
        ASSERT_TRUE((a * b).contains(x * y));
        ASSERT_TRUE(square(a).contains(x * x));
        ASSERT_TRUE(pow(a, 3).contains(x * x * x));
        ASSERT_TRUE(hull(a, b).contains(x));
        if (!b.contains_zero()) {
            ASSERT_TRUE((a / b).contains(x / y));
        } else {
            EXPECT_THROW(a / b, std::domain_error);
        }
        EXPECT_LE(a.mig(), abs_of(x));
        EXPECT_GE(a.mag(), abs_of(x));
    }
}

TEST(IntervalProperty, ComplexSoundness) {
    for (int i = 0; i < 200; ++i) {
        ComplexInterval a(rand_interval(), rand_interval()), b(rand_interval(), rand_interval());
        QComplex x(rand_member(a.re), rand_member(a.im)), y(rand_member(b.re), rand_member(b.im));
        QComplex p = x * y;
        ComplexInterval e = a * b;
        ASSERT_TRUE(e.re.contains(p.re) && e.im.contains(p.im));
        QComplex c = x * x * x;
        ComplexInterval e3 = pow(a, 3);
        ASSERT_TRUE(e3.re.contains(c.re) && e3.im.contains(c.im));
        ASSERT_TRUE(a.norm2().contains(x.norm2()));
    }
}

TEST(MultiPoly, ReduceSquare) {
    MultiPoly a = MultiPoly::variable(2, 0), b = MultiPoly::variable(2, 1);
    MultiPoly one = MultiPoly::constant(2, Rational(1));
    // b^4 -> (1 - a^2)^2
    MultiPoly p = b * b * b * b;
    MultiPoly r = p.reduce_square(1, one - a * a);
    EXPECT_EQ(r, (one - a * a) * (one - a * a));
    EXPECT_EQ(r.degree_in(1), 0u);
    // replacement reintroducing the variable is reduced again
    MultiPoly s = (a * a * a).reduce_square(0, a + one);
    EXPECT_LE(s.degree_in(0), 1u);
    // a^3 = a * a^2 = a (a + 1) = a^2 + a = 2a + 1
    EXPECT_EQ(s, a * Rational(2) + one);
}

// Property: box_lower_bound is below every value on [-1,1]^k and exact for
// linear polynomials (oracle: brute force over the vertices).
TEST(MultiPolyProperty, BoxBoundSoundness) {
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t nv = 3;
        MultiPoly p(nv);
        for (int t = 0; t < 6; ++t) {
            MultiPoly::Exponents e(nv);
            for (auto& x : e) x = static_cast<unsigned>(oracle::rand_int(0, 2));
            p.add_term(e, oracle::rand_rational(20, 5));
        }
        Rational lb = box_lower_bound(p);
        for (int s = 0; s < 40; ++s) {
            std::vector<Rational> pt;
            for (std::size_t k = 0; k < nv; ++k) pt.push_back(Rational(oracle::rand_int(-8, 8), 8));
            ASSERT_LE(lb, p.eval(pt));
        }
    }
    for (int trial = 0; trial < 40; ++trial) {
        MultiPoly p = MultiPoly::constant(3, oracle::rand_rational(20, 3));
        for (std::size_t k = 0; k < 3; ++k) p += MultiPoly::variable(3, k) * oracle::rand_rational(9, 4);
        Rational best;
        bool first = true;
        for (int m = 0; m < 8; ++m) {
            std::vector<Rational> v;
            for (int k = 0; k < 3; ++k) v.push_back(Rational((m >> k) & 1 ? 1 : -1));
            Rational val = p.eval(v);
            if (first || val < best) best = val;
            first = false;
        }
        EXPECT_EQ(box_lower_bound(p), best);
    }
}

TEST(NumberField, Selection) {
    EXPECT_EQ(NumberField::for_orders({}), &NumberField::rationals());
    EXPECT_EQ(NumberField::for_orders({2, 1}), &NumberField::rationals());
    EXPECT_EQ(NumberField::for_orders({8, 3}), nullptr);
    EXPECT_EQ(NumberField::for_orders({8, 6}), nullptr);
    EXPECT_EQ(NumberField::for_orders({8, 12}), nullptr);
    EXPECT_EQ(NumberField::for_orders({5}), nullptr);
    const NumberField* f = NumberField::for_orders({4, 6});
    ASSERT_NE(f, nullptr);
    EXPECT_TRUE(f->supports(12));
    EXPECT_EQ(NumberField::for_orders({8, 4})->degree(), 4);
}

TEST(NumberField, TrigIdentitiesAreExact) {
    for (unsigned s : {2u, 3u, 4u, 6u, 8u, 12u}) {
        const NumberField& f = *NumberField::for_orders({s});
        for (int k = 0; k < 2 * static_cast<int>(s); ++k) {
            auto [c, sn] = root_of_unity(f, s, k);
            FieldElem one = c * c + sn * sn;
            ASSERT_EQ(one.as_rational(), std::optional<Rational>(1)) << "s=" << s << " k=" << k;
            const long double ang = M_PIl * k / s;
            EXPECT_NEAR(c.approx(), std::cos(ang), 1e-12);
            EXPECT_NEAR(sn.approx(), std::sin(ang), 1e-12);
        }
    }
    const NumberField& f8 = *NumberField::for_orders({8});
    auto [c4, s4] = root_of_unity(f8, 4, 1);
    EXPECT_EQ((c4 * c4).as_rational(), std::optional<Rational>(Rational(1, 2)));
    EXPECT_EQ((c4 - s4).sign(), 0);
}

// Oracle: max over facets in floating point, and |a| + |b| for the square.
TEST(NumberField, PolygonNorm) {
    EXPECT_EQ(ps_norm(Rational(3), Rational(-4), 2).as_rational(), std::optional<Rational>(7));
    EXPECT_EQ(ps_norm(Rational(-5), Rational(0), 1).as_rational(), std::optional<Rational>(5));
    EXPECT_THROW(ps_norm(Rational(1), Rational(1), 1), std::domain_error);
    for (unsigned s : {2u, 3u, 4u, 6u, 8u, 12u}) {
        for (int i = 0; i < 30; ++i) {
            Rational re = oracle::rand_rational(30, 7), im = oracle::rand_rational(30, 7);
            long double best = -1e300L;
            for (unsigned m = 0; m < 2 * s; ++m) {
                long double a = -M_PIl * m / s, b = -M_PIl / s;
                long double kr = std::cos(a) + std::cos(a + b), ki = std::sin(a) + std::sin(a + b);
                best = std::max(best, kr * oracle::to_ld(re) - ki * oracle::to_ld(im));
            }
            best /= 1 + std::cos(M_PIl / s);
            FieldElem nrm = ps_norm(re, im, s);
            EXPECT_NEAR(nrm.approx(), static_cast<double>(best), 1e-9) << "s=" << s;
            ComplexInterval box{RatInterval(re), RatInterval(im)};
            RatInterval enc = ps_norm_enclosure(box, s, Rational(1, 1000000));
            EXPECT_TRUE(enc.lo <= nrm.upper_bound(Rational(1, 1000000000)));
            EXPECT_TRUE(enc.hi >= nrm.lower_bound(Rational(1, 1000000000)));
        }
    }
}
