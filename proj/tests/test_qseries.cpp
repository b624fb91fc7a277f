#include <gtest/gtest.h>

#include <random>

#include "mfid/qseries.hpp"

using namespace mfid;

namespace {

RatSeries delta_series(std::size_t prec) {
    RatSeries p = RatSeries::one(Rational(0), prec);
    for (std::size_t n = 1; n < prec; ++n) {
        std::vector<Rational> f(prec);
        f[0] = 1;
        f[n] = -1;
        p = p * RatSeries(f).pow(24);
    }
    return p.shift_up(1).truncate(prec);
}

RatSeries random_series(std::mt19937_64& rng, std::size_t prec) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < prec; ++i)
        c.emplace_back(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 6));
    return RatSeries(std::move(c));
}

}  // namespace

TEST(QSeries, MulExamples) {
    auto r = qs_mul(rat_series({1, 1, 0}), rat_series({1, -1, 0}));
    EXPECT_EQ(r, rat_series({1, 0, -1}));
    auto e4 = rat_series({1, 240, 2160});
    EXPECT_EQ(e4 * e4, rat_series({1, 480, 61920}));
}

TEST(QSeries, DeltaTimesInverse) {
    auto d = delta_series(31).shift_down(1);
    ASSERT_EQ(d.prec(), 30u);
    auto one = d * qs_inv(d);
    EXPECT_EQ(one, RatSeries::one(Rational(0), 30));
}

TEST(QSeries, InverseExamples) {
    EXPECT_EQ(qs_inv(rat_series({1, -1, 0, 0, 0})), rat_series({1, 1, 1, 1, 1}));
    auto dq = delta_series(6).shift_down(1);
    auto inv = qs_inv(dq);
    EXPECT_EQ(inv[0], 1);
    EXPECT_EQ(inv[1], 24);
    EXPECT_EQ(inv[2], 324);
    EXPECT_EQ(qs_inv(rat_series({2})), RatSeries::constant(Rational(1, 2), 1));
    try {
        qs_inv(rat_series({0, 1}));
        FAIL();
    } catch (const std::domain_error& e) {
        EXPECT_NE(std::string(e.what()).find("not a unit"), std::string::npos);
    }
}

TEST(QSeries, PowExamples) {
    auto f = rat_series({1, 1, 0});
    EXPECT_EQ(qs_pow(f, 0), RatSeries::one(Rational(0), 3));
    EXPECT_EQ(qs_pow(f, 2), rat_series({1, 2, 1}));
    EXPECT_EQ(qs_pow(rat_series({1, -1, 0, 0}), 24), rat_series({1, -24, 276, -2024}));
}

TEST(QSeries, Valuation) {
    EXPECT_EQ(qs_valuation(delta_series(10)), 1u);
    EXPECT_EQ(qs_valuation(rat_series({1, 240})), 0u);
    EXPECT_FALSE(qs_valuation(RatSeries::zero(Rational(0), 10)).has_value());
}

TEST(QSeries, RingLawsAndPrecisionContract) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        auto f = random_series(rng, 20), g = random_series(rng, 20), h = random_series(rng, 20);
        EXPECT_EQ((f * g) * h, f * (g * h));
        EXPECT_EQ(f * g, g * f);
    }
    for (int i = 0; i < 50; ++i) {
        std::size_t pf = 1 + rng() % 25, pg = 1 + rng() % 25;
        auto f = random_series(rng, pf), g = random_series(rng, pg);
        const std::size_t m = std::min(pf, pg);
        EXPECT_EQ((f * g).prec(), m);
        EXPECT_EQ((f + g).prec(), m);
        EXPECT_EQ((f - g).prec(), m);
        EXPECT_EQ(f.pow(3).prec(), pf);
        if (f[0] != 0) {
            EXPECT_EQ(f.inv().prec(), pf);
            EXPECT_EQ(f * f.inv(), RatSeries::one(Rational(0), pf));
        }
    }
}

TEST(QSeries, PowAdditive) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 20; ++i) {
        auto f = random_series(rng, 12);
        unsigned a = rng() % 5, b = rng() % 5;
        EXPECT_EQ(f.pow(a + b), f.pow(a) * f.pow(b));
    }
}

TEST(QSeries, ShiftsAndDilation) {
    auto f = rat_series({0, 0, 3, 4});
    EXPECT_EQ(f.shift_down(2), rat_series({3, 4}));
    EXPECT_THROW(f.shift_down(3), std::domain_error);
    EXPECT_EQ(f.shift_up(1).prec(), 5u);
    EXPECT_EQ(rat_series({1, 2}).dilate(3), rat_series({1, 0, 0, 2, 0, 0}));
    EXPECT_THROW(f[4], std::out_of_range);
}

TEST(QSeries, NumberFieldCoefficients) {
    auto k = NumberField::from_polynomial(RatPoly{Rational(-2), Rational(0), Rational(1)});
    auto r = k.generator();
    NFSeries f(std::vector<NumberFieldElement>{k.one(), r, k.zero()});
    auto g = f * f.inv();
    EXPECT_EQ(g, NFSeries::one(k.one(), 3));
    EXPECT_EQ((f * f)[2], k.from_rational(2));
}
