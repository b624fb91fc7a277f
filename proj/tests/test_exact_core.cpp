#include <gtest/gtest.h>

#include <random>

#include "mfid/exact/irreducibility.hpp"
#include "mfid/exact/number_field.hpp"

using namespace mfid;

namespace {

RatPoly ipoly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return RatPoly(std::move(v));
}

const RatPoly T24 = ipoly({-20468736, -1080, 1});

}  // namespace

TEST(Rational, CanonicalForm) {
    Rational a = make_rational(6, -4);
    EXPECT_EQ(num(a), -3);
    EXPECT_EQ(den(a), 2);
    EXPECT_EQ(to_string(Rational(0)), "0/1");
    EXPECT_EQ(parse_rational("-10/4"), Rational(-5, 2));
    EXPECT_EQ(parse_rational("7"), Rational(7));
}

TEST(Rational, RingLawsRandom) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-1000, 1000), dd(1, 500);
    for (int i = 0; i < 300; ++i) {
        Rational a(d(rng), dd(rng)), b(d(rng), dd(rng)), c(d(rng), dd(rng));
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + 0, a);
        EXPECT_EQ(a * 1, a);
    }
}

TEST(RatPoly, RingLawsRandom) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-20, 20);
    auto rnd = [&] {
        std::vector<Rational> c;
        int deg = static_cast<int>(rng() % 5);
        for (int i = 0; i <= deg; ++i) c.emplace_back(d(rng), 1 + rng() % 7);
        return RatPoly(std::move(c));
    };
    for (int i = 0; i < 100; ++i) {
        RatPoly a = rnd(), b = rnd(), c = rnd();
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + RatPoly(), a);
        EXPECT_EQ(a * RatPoly::constant(1), a);
        if (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            EXPECT_EQ(q * b + r, a);
            EXPECT_LT(r.degree(), b.degree());
        }
    }
    EXPECT_EQ(RatPoly().degree(), RatPoly::zero_degree);
}

TEST(PolyDiscriminant, Examples) {
    EXPECT_EQ(poly_discriminant(ipoly({1, 0, 1})), -4);
    EXPECT_EQ(poly_discriminant(ipoly({-1, -1, 1})), 5);
    EXPECT_EQ(poly_discriminant(T24), 83041344);
    EXPECT_THROW(poly_discriminant(ipoly({3})), std::invalid_argument);
}

TEST(PolyDiscriminant, MatchesRootProduct) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        int d = 2 + static_cast<int>(rng() % 4);
        std::vector<Rational> roots;
        RatPoly p = RatPoly::constant(1);
        for (int i = 0; i < d; ++i) {
            Rational r(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 4));
            roots.push_back(r);
            p = p * RatPoly{-r, Rational(1)};
        }
        Rational lead(1 + static_cast<long>(rng() % 5));
        p = p * lead;
        Rational prod = 1;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) prod *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
        EXPECT_EQ(poly_discriminant(p), rpow(lead, 2 * d - 2) * prod);
    }
}

TEST(FactorDegreesModP, Examples) {
    EXPECT_EQ(poly_factor_degrees_mod_p(ipoly({1, 0, 1}), 5), (std::vector<int>{1, 1}));
    EXPECT_EQ(poly_factor_degrees_mod_p(ipoly({1, 0, 1}), 3), (std::vector<int>{2}));
    EXPECT_EQ(poly_factor_degrees_mod_p(T24, 7), (std::vector<int>{1, 1}));
    EXPECT_THROW(poly_factor_degrees_mod_p(ipoly({1, 0, 3}), 3), std::invalid_argument);
}

TEST(Irreducibility, Examples) {
    EXPECT_EQ(poly_irreducible(T24).verdict, IrreducibilityVerdict::Irreducible);
    auto c = poly_irreducible(ipoly({-1, 0, 1}));
    EXPECT_EQ(c.verdict, IrreducibilityVerdict::Reducible);
    ASSERT_TRUE(c.root.has_value());
    EXPECT_EQ(ipoly({-1, 0, 1})(*c.root), 0);
    EXPECT_EQ(poly_irreducible(ipoly({-2, 0, 0, 1})).verdict, IrreducibilityVerdict::Irreducible);
    // x^4 + 1 is reducible mod every prime; patterns alone cannot certify it.
    auto q = poly_irreducible(ipoly({1, 0, 0, 0, 1}));
    EXPECT_NE(q.verdict, IrreducibilityVerdict::Reducible);
    // (x^2+1)(x^2+2) has no rational root but is reducible.
    auto r = poly_irreducible(ipoly({2, 0, 3, 0, 1}));
    EXPECT_NE(r.verdict, IrreducibilityVerdict::Irreducible);
}

TEST(Irreducibility, NeverIrreducibleWithRationalRoot) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 60; ++t) {
        Rational r(static_cast<long>(rng() % 31) - 15, 1 + static_cast<long>(rng() % 5));
        std::vector<Rational> c;
        for (int i = 0; i < 3; ++i) c.emplace_back(static_cast<long>(rng() % 21) - 10);
        c.emplace_back(1);
        RatPoly p = RatPoly(c) * RatPoly{-r, Rational(1)};
        EXPECT_NE(poly_irreducible(p).verdict, IrreducibilityVerdict::Irreducible) << p;
    }
}

TEST(NumberField, ArithmeticExamples) {
    auto k = NumberField::from_polynomial(ipoly({-5, 0, 1}));
    auto x = k.generator();
    EXPECT_EQ(nf_mul(x, x), k.from_rational(5));
    EXPECT_EQ(nf_inv(x), x * Rational(1, 5));
    auto k2 = NumberField::from_polynomial(ipoly({-144169, 0, 1}));
    EXPECT_EQ(nf_inv(k2.generator()), k2.generator() * Rational(1, 144169));
    EXPECT_THROW(nf_inv(k.zero()), std::domain_error);
    EXPECT_THROW(x + k2.generator(), std::invalid_argument);
    EXPECT_THROW(NumberField::from_polynomial(ipoly({-4, 0, 1})), Unsupported);
}

TEST(NumberField, FieldLawsRandomQuadratics) {
    std::mt19937_64 rng(17);
    const long ds[] = {-1, 2, -7, 13, 144169};
    for (long d : ds) {
        auto k = NumberField::from_polynomial(ipoly({-d, 0, 1}));
        auto rnd = [&] {
            return k.from_coords({Rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 9)),
                                  Rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 9))});
        };
        for (int i = 0; i < 100; ++i) {
            auto a = rnd(), b = rnd(), c = rnd();
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ((a * b) * c, a * (b * c));
            if (!a.is_zero()) EXPECT_EQ(nf_inv(a) * a, k.one());
            EXPECT_EQ(a.conjugate().conjugate(), a);
            EXPECT_EQ((a * a.conjugate()).rational_part(), a.norm());
        }
    }
}

TEST(NumberField, CyclotomicPolynomials) {
    EXPECT_EQ(cyclotomic_polynomial(1), ipoly({-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(4), ipoly({1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12), ipoly({1, 0, -1, 0, 1}));
    auto z = NumberField::cyclotomic(12).generator();
    EXPECT_EQ(z.pow(12), NumberField::cyclotomic(12).one());
    EXPECT_NE(z.pow(6), NumberField::cyclotomic(12).one());
}

TEST(QuadFieldDiscriminant, Examples) {
    EXPECT_EQ(quad_field_discriminant(144169), 144169);
    EXPECT_EQ(quad_field_discriminant(18209), 18209);
    EXPECT_EQ(quad_field_discriminant(2), 8);
    EXPECT_EQ(quad_field_discriminant(-1), -4);
    EXPECT_THROW(quad_field_discriminant(12), std::invalid_argument);
}

TEST(SquarefreeKernel, Examples) {
    auto a = squarefree_kernel(83041344);
    EXPECT_TRUE(a.complete);
    EXPECT_EQ(a.kernel, 144169);
    EXPECT_EQ(a.square_root, 24);
    auto b = squarefree_kernel(4);
    EXPECT_EQ(b.kernel, 1);
    EXPECT_EQ(b.square_root, 2);
    auto c = squarefree_kernel(5);
    EXPECT_EQ(c.kernel, 5);
    EXPECT_EQ(c.square_root, 1);
    EXPECT_EQ(squarefree_kernel(-12).kernel, -3);
}

TEST(Factor, PollardBeyondTrialBound) {
    Integer n = Integer(1000003) * Integer(1000033) * 8;
    auto f = factor(n);
    EXPECT_TRUE(f.complete());
    Integer prod = 1;
    for (auto& [p, e] : f.primes) prod *= ipow(p, e);
    EXPECT_EQ(prod, n);
    auto partial = factor_trial(n, 100);
    EXPECT_FALSE(partial.complete());
}

// Z[sqrt 5] has index 2 in the ring of integers of Q(sqrt 5).
TEST(Dedekind, Examples) {
    EXPECT_EQ(dedekind_index_test(ipoly({-5, 0, 1}), 2), DedekindVerdict::IndexDivisor);
    EXPECT_EQ(dedekind_index_test(T24, 2), DedekindVerdict::IndexDivisor);
    EXPECT_EQ(dedekind_index_test(ipoly({1, 0, 1}), 3), DedekindVerdict::NotIndexDivisor);
    EXPECT_EQ(dedekind_index_test(ipoly({1, 0, 1}), 2), DedekindVerdict::NotIndexDivisor);
    EXPECT_EQ(dedekind_index_test(ipoly({-2, 0, 0, 1}), 3), DedekindVerdict::NotIndexDivisor);
    EXPECT_EQ(dedekind_index_test(ipoly({-8, 0, 1}), 2), DedekindVerdict::IndexDivisor);
}

TEST(Dedekind, UnramifiedPrimesNeverDivideIndex) {
    const RatPoly polys[] = {T24, ipoly({-5, 0, 1}), ipoly({-2, 0, 0, 1}), ipoly({1, 1, 0, 0, 1}), ipoly({-3, 1, 2, 1})};
    for (const auto& p : polys) {
        Integer disc = num(poly_discriminant(p));
        for (auto q : primes_below(200)) {
            if (disc % q == 0) continue;
            EXPECT_EQ(dedekind_index_test(p, q), DedekindVerdict::NotIndexDivisor) << p << " mod " << q;
        }
    }
}
