#include <gtest/gtest.h>

#include "mfid/forms.hpp"

using namespace mfid;

TEST(Eisenstein, Level1Coefficients) {
    auto e4 = eisenstein_level1(4, 4).series;
    EXPECT_EQ(e4, rat_series({1, 240, 2160, 6720}));
    EXPECT_EQ(eisenstein_level1(6, 2).series[1], -504);
    EXPECT_EQ(eisenstein_level1(12, 2).series[1], Rational(65520, 691));
    EXPECT_THROW(eisenstein_level1(5, 3), std::invalid_argument);
    EXPECT_THROW(eisenstein_level1(2, 3), std::invalid_argument);
}

TEST(Delta, Coefficients) {
    auto d = delta(6).series;
    EXPECT_EQ(d, rat_series({0, 1, -24, 252, -1472, 4830}));
    EXPECT_EQ(qs_valuation(d), 1u);
    auto big = delta(51).series;
    for (int n = 1; n <= 50; ++n) EXPECT_EQ((num(big[n]) - sigma(11, n)) % 691, 0) << n;
}

TEST(Delta, EisensteinRelations) {
    const std::size_t p = 100;
    auto e4 = eisenstein_level1(4, p).series, e6 = eisenstein_level1(6, p).series;
    auto e12 = eisenstein_level1(12, p).series, d = delta(p).series;
    EXPECT_EQ(Rational(1, 1728) * (e4.pow(3) - e6 * e6), d);
    EXPECT_EQ(e12 - e6 * e6, Rational(1008 * 756, 691) * d);
    EXPECT_EQ(e12, Rational(1, 691) * (Rational(441) * e4.pow(3) + Rational(250) * e6 * e6));
}

TEST(JFunction, Expansion) {
    auto jq = jfunction(40);
    EXPECT_EQ(jq[0], 1);
    EXPECT_EQ(jq[1], 744);
    EXPECT_EQ(jq[2], 196884);
    // E_12/Delta - j = -432000/691, multiplied through by q
    auto e12 = eisenstein_level1(12, 40).series;
    auto dq = delta(41).series.shift_down(1);
    auto lhs = e12 * dq.inv() - jq;
    std::vector<Rational> expect(40);
    expect[1] = Rational(-432000, 691);
    EXPECT_EQ(lhs, RatSeries(expect));
}

TEST(Dimensions, Formula) {
    EXPECT_EQ(dim_Mk(12), 2);
    EXPECT_EQ(dim_Mk(14), 1);
    EXPECT_EQ(dim_Sk(24), 2);
    EXPECT_EQ(dim_Mk(2), 0);
    EXPECT_EQ(dim_Mk(0), 1);
    EXPECT_EQ(dim_Mk(-4), 0);
    EXPECT_EQ(dim_Sk(10), 0);
    for (int k = 4; k <= 120; k += 2) EXPECT_EQ(static_cast<int>(weight_monomials(k, 3).size()), dim_Mk(k)) << k;
}

TEST(MillerBasis, EchelonProperty) {
    auto b12 = miller_basis(12, 10);
    ASSERT_EQ(b12.size(), 2u);
    EXPECT_EQ(b12[0][0], 1);
    EXPECT_EQ(b12[0][1], 0);
    EXPECT_EQ(b12[1], delta(10).series);
    auto b0 = miller_basis(0, 3);
    ASSERT_EQ(b0.size(), 1u);
    EXPECT_EQ(b0[0], RatSeries::one(Rational(0), 3));
    auto s28 = miller_basis(28, 10, true);
    ASSERT_EQ(s28.size(), 2u);
    EXPECT_EQ(qs_valuation(s28[0]), 1u);
    EXPECT_EQ(qs_valuation(s28[1]), 2u);
    EXPECT_THROW(miller_basis(28, 3), std::invalid_argument);
    for (int k = 4; k <= 60; k += 2) {
        if (k == 2) continue;
        for (bool cusp : {false, true}) {
            auto b = miller_basis(k, static_cast<std::size_t>(dim_Mk(k) + 5), cusp);
            const std::size_t off = cusp ? 1 : 0;
            EXPECT_EQ(b.size(), static_cast<std::size_t>(cusp ? dim_Sk(k) : dim_Mk(k)));
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = 0; j < b.size(); ++j) EXPECT_EQ(b[i][j + off], i == j ? 1 : 0);
        }
    }
}

TEST(EisensteinLevelN, TrivialCharactersMatchLevel1) {
    auto one = DirichletCharacter::trivial(1);
    for (int k : {4, 6, 12}) {
        auto f = eisenstein_levelN(one, one, 1, k, 8);
        auto e = eisenstein_level1(k, 8).series;
        const Rational a0 = f.series[0].rational_part();
        EXPECT_EQ(a0, -bernoulli(static_cast<unsigned>(k)) / k);
        for (std::size_t n = 0; n < 8; ++n) EXPECT_EQ(f.series[n].rational_part() / a0, e[n]);
    }
}

TEST(EisensteinLevelN, CharacterCases) {
    auto chi4 = characters_mod(4)[1];
    auto one = DirichletCharacter::trivial(1);
    auto f = eisenstein_levelN(chi4, one, 1, 3, 10);
    EXPECT_TRUE(f.series[0].is_zero());
    EXPECT_EQ(f.series[1].rational_part(), 2);
    EXPECT_EQ(f.level, 4);
    EXPECT_EQ(f.character.rational_value(3), -1);
    auto g = eisenstein_levelN(one, chi4, 2, 3, 10);
    EXPECT_EQ(g.series[0].rational_part(), -Rational(3, 2) / 3);
    EXPECT_TRUE(g.series[1].is_zero());
    EXPECT_EQ(g.series[2].rational_part(), 2);
    // sigma_2^{1,chi4}(2) = chi4(1) + chi4(2) 4 = 1
    EXPECT_EQ(g.series[4].rational_part(), 2);
    EXPECT_THROW(eisenstein_levelN(one, chi4, 1, 4, 10), std::invalid_argument);
    auto chi5 = characters_mod(5)[1];  // order 4, odd
    auto h = eisenstein_levelN(one, chi5, 1, 3, 6);
    EXPECT_EQ(h.series[1], NumberField::cyclotomic(4).from_rational(2));
    EXPECT_EQ(h.character.order(), 4);
}
