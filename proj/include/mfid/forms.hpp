#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mfid/dirichlet.hpp"
#include "mfid/linalg/matrix.hpp"
#include "mfid/qseries.hpp"

namespace mfid {

template <CoefficientField K>
struct ModularForm {
    int weight = 0;
    std::int64_t level = 1;
    DirichletCharacter character = DirichletCharacter::trivial(1);
    QSeries<K> series;
    std::string label;
};

using RatForm = ModularForm<Rational>;
using NFForm = ModularForm<NumberFieldElement>;

struct SpaceBasis {
    int weight = 0;
    bool cusp_only = false;
    std::vector<RatForm> forms;  // echelon order
    std::size_t size() const { return forms.size(); }
    const RatSeries& operator[](std::size_t i) const { return forms[i].series; }
};

inline int dim_Mk(int k) {
    if (k < 0 || k % 2 != 0) return 0;
    if (k % 12 == 2) return k / 12;
    return k / 12 + 1;
}

inline int dim_Sk(int k) {
    if (k < 12 || k % 2 != 0) return 0;
    return dim_Mk(k) - 1;
}

namespace detail {

// sigma_{e}(n) for n < prec
inline std::vector<Integer> sigma_table(unsigned e, std::size_t prec) {
    std::vector<Integer> s(prec, Integer(0));
    for (std::size_t d = 1; d < prec; ++d) {
        const Integer de = ipow(Integer(d), e);
        for (std::size_t m = d; m < prec; m += d) s[m] += de;
    }
    return s;
}

inline RatSeries from_integers(const std::vector<Integer>& c) {
    std::vector<Rational> r;
    r.reserve(c.size());
    for (const auto& v : c) r.emplace_back(v);
    return RatSeries(std::move(r));
}

}  // namespace detail

/// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n.
inline RatForm eisenstein_level1(int k, std::size_t prec) {
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("eisenstein_level1: weight must be even and >= 4");
    if (prec == 0) throw std::invalid_argument("eisenstein_level1: precision must be positive");
    const Rational scale = Rational(-2 * k) / bernoulli(static_cast<unsigned>(k));
    auto s = detail::sigma_table(static_cast<unsigned>(k - 1), prec);
    std::vector<Rational> c(prec);
    c[0] = 1;
    for (std::size_t n = 1; n < prec; ++n) c[n] = scale * s[n];
    return {k, 1, DirichletCharacter::trivial(1), RatSeries(std::move(c)), "E" + std::to_string(k)};
}

/// q * prod (1 - q^n)^24, one factor at a time, over the integers.
inline RatForm delta(std::size_t prec) {
    if (prec == 0) throw std::invalid_argument("delta: precision must be positive");
    // coefficients of prod_{n<prec} (1-q^n)^24, indices 0..prec-2 suffice
    const std::size_t m = prec > 1 ? prec - 1 : 1;
    std::vector<Integer> p(m, Integer(0));
    p[0] = 1;
    for (std::size_t n = 1; n < m; ++n)
        for (int rep = 0; rep < 24; ++rep)
            for (std::size_t i = m; i-- > n;) p[i] -= p[i - n];
    std::vector<Integer> c(prec, Integer(0));
    for (std::size_t i = 1; i < prec; ++i) c[i] = p[i - 1];
    return {12, 1, DirichletCharacter::trivial(1), detail::from_integers(c), "Delta"};
}

/// j * q = E_4^3 / (Delta / q), an ordinary power series.
inline RatSeries jfunction(std::size_t prec) {
    if (prec < 2) throw std::invalid_argument("jfunction: precision must be at least 2");
    auto e4 = eisenstein_level1(4, prec).series;
    auto dq = delta(prec + 1).series.shift_down(1);
    return e4.pow(3) * dq.inv();
}

/// E_4^a E_6^b Delta^c with 4a + 6b + 12c = k, b in {0,1}, ordered by c.
inline std::vector<RatForm> weight_monomials(int k, std::size_t prec) {
    std::vector<RatForm> out;
    if (k < 0 || k % 2 != 0) return out;
    if (k == 0) {
        out.push_back({0, 1, DirichletCharacter::trivial(1), RatSeries::one(Rational(0), prec), "1"});
        return out;
    }
    const int b = (k % 4 == 2) ? 1 : 0;
    const int rest = k - 6 * b;
    if (rest < 0) return out;
    const auto e4 = eisenstein_level1(4, prec).series;
    const auto e6 = eisenstein_level1(6, prec).series;
    const auto d = delta(prec).series;
    for (int c = 0; 12 * c <= rest; ++c) {
        const int a = (rest - 12 * c) / 4;
        RatSeries s = e4.pow(static_cast<unsigned>(a)) * d.pow(static_cast<unsigned>(c));
        if (b) s = s * e6;
        std::string label = "E4^" + std::to_string(a) + (b ? "*E6" : "") + "*Delta^" + std::to_string(c);
        out.push_back({k, 1, DirichletCharacter::trivial(1), std::move(s), std::move(label)});
    }
    return out;
}

/// Reduced echelon basis of M_k (or S_k): form i has leading term q^i (q^{i+1} for cusp bases).
inline SpaceBasis miller_basis(int k, std::size_t prec, bool cusp_only = false) {
    if (k < 0 || k % 2 != 0 || k == 2) throw std::invalid_argument("miller_basis: weight must be even, 0 or >= 4");
    const int dim = dim_Mk(k);
    if (prec <= static_cast<std::size_t>(dim)) throw std::invalid_argument("miller_basis: precision must exceed the dimension");
    auto mons = weight_monomials(k, prec);
    if (static_cast<int>(mons.size()) != dim) throw std::logic_error("miller_basis: monomial count differs from dimension");
    RatMatrix m(mons.size(), prec, Rational(0));
    for (std::size_t i = 0; i < mons.size(); ++i)
        for (std::size_t n = 0; n < prec; ++n) m(i, n) = mons[i].series[n];
    auto piv = m.rref();
    for (std::size_t i = 0; i < piv.size(); ++i)
        if (piv[i] != i) throw std::logic_error("miller_basis: unexpected pivot structure");
    SpaceBasis b;
    b.weight = k;
    b.cusp_only = cusp_only;
    for (std::size_t i = cusp_only ? 1 : 0; i < mons.size(); ++i) {
        std::vector<Rational> c;
        for (std::size_t n = 0; n < prec; ++n) c.push_back(m(i, n));
        b.forms.push_back({k, 1, DirichletCharacter::trivial(1), RatSeries(std::move(c)),
                           (cusp_only ? "s" : "m") + std::to_string(k) + "_" + std::to_string(i)});
    }
    return b;
}

/// Delta^j E_4^{k/4 - 3j} for j = 1..dim S_k; needs 4 | k.
inline std::vector<RatSeries> delta_e4_cusp_basis(int k, std::size_t prec) {
    if (k % 4 != 0 || k < 12) throw std::invalid_argument("delta_e4_cusp_basis: weight must be a multiple of 4, >= 12");
    std::vector<RatSeries> out;
    const auto e4 = eisenstein_level1(4, prec).series;
    const auto d = delta(prec).series;
    for (int j = 1; j <= dim_Sk(k); ++j)
        out.push_back(d.pow(static_cast<unsigned>(j)) * e4.pow(static_cast<unsigned>(k / 4 - 3 * j)));
    return out;
}

/// Image of x in Q(zeta_a) inside Q(zeta_L), a | L, via zeta_a -> zeta_L^{L/a}.
inline NumberFieldElement cyclotomic_lift(const NumberFieldElement& x, int target) {
    const int a = x.parent().degree() == 1 ? 1 : x.parent().cyclotomic_order();
    if (a <= 0 || target % a != 0) throw std::invalid_argument("cyclotomic_lift: source field does not embed");
    const auto f = NumberField::cyclotomic(target);
    RatPoly p;
    for (std::size_t j = 0; j < x.coords().size(); ++j)
        p = p + RatPoly::monomial(x.coords()[j], j * static_cast<std::size_t>(target / a));
    return f.from_poly(p);
}

/// E_k^{psi,phi,t}: delta(psi) L(1-k, phi) + 2 sum sigma^{psi,phi}_{k-1}(n) q^{tn}.
inline NFForm eisenstein_levelN(const DirichletCharacter& psi, const DirichletCharacter& phi, int t, int k,
                                std::size_t prec) {
    if (k < 3) throw std::invalid_argument("eisenstein_levelN: weight must be >= 3");
    if (t < 1) throw std::invalid_argument("eisenstein_levelN: t must be positive");
    if (!psi.is_primitive() || !phi.is_primitive()) throw std::invalid_argument("eisenstein_levelN: characters must be primitive");
    if (psi.parity() * phi.parity() != (k % 2 == 0 ? 1 : -1))
        throw std::invalid_argument("eisenstein_levelN: parity mismatch, the series vanishes");
    if (prec == 0) throw std::invalid_argument("eisenstein_levelN: precision must be positive");
    const int L = static_cast<int>(lcm_i64(psi.order(), phi.order()));
    const auto field = NumberField::cyclotomic(L);
    std::vector<NumberFieldElement> c(prec, field.zero());
    if (psi.modulus() == 1) c[0] = cyclotomic_lift(gen_bernoulli(static_cast<unsigned>(k), phi), L) * Rational(-1, k);
    for (std::size_t n = 1; n * static_cast<std::size_t>(t) < prec; ++n)
        c[n * static_cast<std::size_t>(t)] =
            sigma_gen(static_cast<unsigned>(k - 1), psi, phi, static_cast<std::int64_t>(n)) * Rational(2);
    const std::int64_t level = psi.modulus() * phi.modulus() * t;
    return {k, level, lift_product(psi, phi, level), NFSeries(std::move(c)),
            "E" + std::to_string(k) + "[" + psi.label() + "," + phi.label() + "," + std::to_string(t) + "]"};
}

}  // namespace mfid
