#include <gtest/gtest.h>

#include "mfid/hecke.hpp"

using namespace mfid;

namespace {

RatPoly ipoly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return RatPoly(std::move(v));
}

RatMatrix tn(int n, int k) { return hecke_matrix(n, k).entries; }

}  // namespace

TEST(HeckeAction, Examples) {
    auto d = delta(20).series;
    EXPECT_EQ(hecke_action(d, 2, 12, 5), Rational(-24) * d.truncate(5));
    auto e12 = eisenstein_level1(12, 40).series;
    EXPECT_EQ(hecke_action(e12, 2, 12, 10), Rational(1 + 2048) * e12.truncate(10));
    EXPECT_EQ(hecke_action(d, 1, 12, 20), d);
    try {
        hecke_action(d, 5, 12, 10);
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("46"), std::string::npos);
    }
}

TEST(HeckeAction, EisensteinEigenvalues) {
    for (int k = 4; k <= 16; k += 2)
        for (int p : {2, 3, 5}) {
            auto e = eisenstein_level1(k, static_cast<std::size_t>(p * 12 + 1)).series;
            const Rational lam = 1 + Rational(ipow(Integer(p), static_cast<unsigned>(k - 1)));
            auto img = hecke_action(e, p, k, 13);
            EXPECT_EQ(img, lam * e.truncate(13)) << k << " " << p;
            // constant term relation a_0 sum chi(m1) m1^{k-1} = lambda a_0
            EXPECT_EQ(img[0], lam * e[0]);
        }
}

TEST(HeckeAction, CharacterTwist) {
    auto chi4 = characters_mod(4)[1];
    auto one = DirichletCharacter::trivial(1);
    auto f = eisenstein_levelN(one, chi4, 1, 3, 40);
    // E_3^{1,chi} is a T_p eigenform with eigenvalue 1 + chi(p) p^2
    for (int p : {3, 5}) {
        auto img = hecke_action(f.series, p, 3, f.character, 8);
        const Rational lam = 1 + chi4.rational_value(p) * p * p;
        EXPECT_EQ(img, f.series.truncate(8).map([&](const NumberFieldElement& x) { return x * lam; }));
    }
}

TEST(HeckeMatrix, Examples) {
    EXPECT_EQ(tn(2, 12)(0, 0), -24);
    auto m24 = tn(2, 24);
    EXPECT_EQ(m24(0, 0) + m24(1, 1), 1080);
    EXPECT_EQ(tn(2, 16)(0, 0), 216);
    EXPECT_THROW(hecke_matrix(2, 24, 4), std::invalid_argument);
}

TEST(HeckeMatrix, Charpolys) {
    EXPECT_EQ(charpoly(hecke_matrix(2, 12)), ipoly({24, 1}));
    EXPECT_EQ(charpoly(hecke_matrix(2, 24)), ipoly({-20468736, -1080, 1}));
    auto t28 = charpoly(hecke_matrix(2, 28));
    EXPECT_EQ(t28.degree(), 2);
    EXPECT_EQ(squarefree_kernel(num(poly_discriminant(t28))).kernel, 18209);
}

TEST(HeckeMatrix, MultiplicationRules) {
    for (int k : {24, 36}) {
        EXPECT_EQ(tn(2, k) * tn(3, k), tn(6, k)) << k;
    }
    for (int k : {12, 16, 18, 20, 22, 26, 24, 36}) {
        auto t2 = tn(2, k);
        const auto d = t2.rows();
        auto id = RatMatrix::identity(d, Rational(0));
        EXPECT_EQ(t2 * t2, tn(4, k) + Rational(ipow(Integer(2), static_cast<unsigned>(k - 1))) * id) << k;
    }
    for (int k = 12; k <= 40; k += 2) {
        if (dim_Sk(k) == 0) continue;
        EXPECT_EQ(tn(2, k) * tn(3, k), tn(3, k) * tn(2, k)) << k;
    }
}

TEST(HeckeMatrix, DeltaE4BasisIntegrality) {
    for (int k : {24, 28, 32, 36, 48}) {
        auto m = hecke_matrix_delta_e4_basis(2, k);
        EXPECT_TRUE(is_integral(m)) << k;
        EXPECT_EQ(charpoly(m), charpoly(hecke_matrix(2, k))) << k;
    }
}

TEST(Eigenbasis, Examples) {
    auto d = eigenbasis(12);
    EXPECT_EQ(d.field.degree(), 1);
    EXPECT_EQ(d.a(1).rational_part(), 1);
    EXPECT_EQ(d.a(2).rational_part(), -24);
    auto e = eigenbasis(24, 20);
    EXPECT_EQ(e.field.modulus(), ipoly({-20468736, -1080, 1}));
    EXPECT_EQ(e.a(1), e.field.one());
    EXPECT_EQ(e.a(2), e.field.generator());
    auto f = eigenbasis(26);
    EXPECT_EQ(f.field.degree(), 1);
}

TEST(Eigenbasis, EigenvalueConsistency) {
    for (int k : {12, 16, 24, 28, 36, 40}) {
        auto f = eigenbasis(k, 60);
        EXPECT_EQ(f.a(1), f.field.one());
        for (int m : {2, 3, 5}) {
            auto img = hecke_action(f.series, m, k, 12);
            auto lam = f.a(static_cast<std::size_t>(m));
            EXPECT_EQ(img, f.series.truncate(12).map([&](const NumberFieldElement& x) { return lam * x; }))
                << k << " T_" << m;
        }
        // multiplicativity of normalized coefficients
        EXPECT_EQ(f.a(6), f.a(2) * f.a(3));
        EXPECT_EQ(f.a(4), f.a(2) * f.a(2) - f.field.from_rational(Rational(ipow(Integer(2), static_cast<unsigned>(k - 1)))));
    }
}

TEST(Eigenbasis, GaloisConjugate) {
    auto e = eigenbasis(24, 20);
    auto c = galois_conjugate(e);
    EXPECT_EQ(c.a(2), e.field.from_rational(1080) - e.field.generator());
    EXPECT_EQ(galois_conjugate(c).series, e.series);
    auto r = eigenbasis(26);
    EXPECT_EQ(galois_conjugate(r).series, r.series);
    EXPECT_THROW(galois_conjugate(eigenbasis(36)), Unsupported);
}
