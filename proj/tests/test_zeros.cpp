#include <gtest/gtest.h>

#include "mfid/identities.hpp"
#include "mfid/zeros.hpp"

using namespace mfid;

TEST(ExpandE12n, SmallCases) {
    auto e1 = expand_E12n(1, 10);
    ASSERT_EQ(e1.a.size(), 2u);
    EXPECT_EQ(e1.a[0], 1);
    EXPECT_EQ(e1.a[1], 0);
    EXPECT_EQ(algebraic_poly(e1), RatPoly::x());

    auto e2 = expand_E12n(2, 10);
    EXPECT_EQ(e2.a[0], 1);
    EXPECT_EQ(e2.a[1], e24_stated_b().value());
    EXPECT_EQ(e2.a[2], e24_stated_a().value());
    auto p = algebraic_poly(e2);
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.coeffs()[2], 1);

    EXPECT_THROW(expand_E12n(3, 4), std::invalid_argument);
    EXPECT_THROW(expand_E12n(0, 10), std::invalid_argument);
}

TEST(ExpandE12n, ExactResidualGate) {
    for (int n = 1; n <= 6; ++n) {
        auto e = expand_E12n(n, static_cast<std::size_t>(n) + 2);
        EXPECT_EQ(e.a[0], 1);
        EXPECT_FALSE(expansion_residual(e, 4 * static_cast<std::size_t>(n) + 20).has_value()) << n;
        EXPECT_EQ(algebraic_poly(e).degree(), n);
    }
}

TEST(EvalSeries, FixedPointValues) {
    const Complex i(0, 1);
    auto d = eval_series_at(delta(40).series, i, delta_envelope());
    // mpmath product formula, 40 digits
    EXPECT_LT(abs(d.value - Complex(Real("0.001785369850642151904343054960342262310581"))), Real(1e-30));
    EXPECT_LT(d.tail, Real(1e-30));
    auto e6 = eval_series_at(eisenstein_level1(6, 40).series, i, eisenstein_envelope(6));
    EXPECT_LT(abs(e6.value), Real(1e-25));
    auto e4 = eval_series_at(eisenstein_level1(4, 40).series, i, 4).value;
    EXPECT_LT(abs(e4 * e4 * e4 / d.value - Complex(1728)), Real(1e-20));
    // prec 30 vs 60
    auto d30 = eval_series_at(delta(30).series, i, 12).value, d60 = eval_series_at(delta(60).series, i, 12).value;
    EXPECT_LT(abs(d30 - d60), Real(1e-25));
}

TEST(EvalSeries, RejectsLowPoints) {
    EXPECT_THROW(eval_series_at(delta(20).series, Complex(Real(0), Real("0.5")), 12), std::domain_error);
}

TEST(ArcZeros, CountsAndLocations) {
    // theta values from an independent mpmath root search
    const std::vector<std::vector<double>> want = {
        {1.3167370540380434739},
        {1.1812378433702791277, 1.4398397647033793677},
        {1.1364353064437629191, 1.3089736693642653169, 1.4835304347723339979}};
    for (int n = 1; n <= 3; ++n) {
        auto zs = find_arc_zeros(12 * n);
        ASSERT_EQ(zs.size(), static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < zs.size(); ++i) {
            EXPECT_NEAR(zs[i].theta, want[static_cast<std::size_t>(n - 1)][i], 1e-11);
            EXPECT_LE(zs[i].residual, 1e-12);
        }
    }
    EXPECT_EQ(find_arc_zeros(48).size(), 4u);
    EXPECT_THROW(find_arc_zeros(16), std::invalid_argument);
}

TEST(ArcZeros, StableUnderDoubledTerms) {
    for (int n = 1; n <= 3; ++n) {
        ArcOptions a, b;
        a.terms = arc_terms(12 * n);
        b.terms = 2 * a.terms;
        auto z1 = find_arc_zeros(12 * n, a), z2 = find_arc_zeros(12 * n, b);
        ASSERT_EQ(z1.size(), z2.size());
        for (std::size_t i = 0; i < z1.size(); ++i) EXPECT_LT(std::abs(z1[i].theta - z2[i].theta), 1e-10);
    }
}

TEST(JValue, MatchesShiftedRoots) {
    auto r1 = jvalue_algebraicity_check(1);
    EXPECT_TRUE(r1.verified) << r1.failure;
    ASSERT_EQ(r1.zeros.size(), 1u);
    EXPECT_LT(abs(r1.zeros[0].j - to_real(Rational(432000, 691))), Real(1e-8));

    auto r2 = jvalue_algebraicity_check(2);
    EXPECT_TRUE(r2.verified) << r2.failure;
    EXPECT_LE(r2.max_pair_distance, 1e-9);
    ASSERT_EQ(r2.zeros.size(), 2u);
    EXPECT_NEAR(static_cast<double>(r2.zeros[0].j), 96.726627913370830274, 1e-9);
    EXPECT_NEAR(static_cast<double>(r2.zeros[1].j), 1343.2728176876955348, 1e-9);

    auto r3 = jvalue_algebraicity_check(3);
    EXPECT_TRUE(r3.verified) << r3.failure;
    EXPECT_LE(r3.max_pair_distance, 1e-8);

    for (int n = 1; n <= 4; ++n) {
        auto r = jvalue_algebraicity_check(n);
        EXPECT_EQ(r.zeros.size(), static_cast<std::size_t>(n));
        EXPECT_TRUE(r.roots_ok);
        EXPECT_LE(r.max_root_residual, 1e-10);
    }
}

TEST(JValue, TightToleranceFails) {
    JValueOptions o;
    o.tol_match = 1e-60;
    EXPECT_FALSE(jvalue_algebraicity_check(2, o).verified);
}
