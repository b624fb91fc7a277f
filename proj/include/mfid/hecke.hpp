#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mfid/exact/irreducibility.hpp"
#include "mfid/forms.hpp"
#include "mfid/linalg/matrix.hpp"

namespace mfid {

struct HeckeMatrix {
    int n = 0;
    int weight = 0;
    RatMatrix entries{0, 0, Rational(0)};
};

/// f | T_m, coefficient formula with character weight w(m1) = chi(m1) m1^{k-1}.
/// The input must carry a_{m n} for every output index n < prec.
template <CoefficientField K, class Weight>
QSeries<K> hecke_action_weighted(const QSeries<K>& f, std::int64_t m, std::size_t prec, Weight&& w) {
    if (m < 1) throw std::invalid_argument("hecke_action: index must be positive");
    if (prec == 0) throw std::invalid_argument("hecke_action: precision must be positive");
    const std::size_t need = static_cast<std::size_t>(m) * (prec - 1) + 1;
    if (f.prec() < need)
        throw std::invalid_argument("hecke_action: input precision " + std::to_string(f.prec()) + " < required " +
                                    std::to_string(need));
    const auto divs = divisors(m);
    std::vector<K> out(prec, f.zero_coeff());
    K s0 = f.zero_coeff();
    for (auto d : divs) s0 = s0 + w(d);
    out[0] = f[0] * s0;
    for (std::size_t n = 1; n < prec; ++n) {
        K acc = f.zero_coeff();
        for (auto d : divs) {
            if (n % static_cast<std::size_t>(d)) continue;
            const std::size_t idx = static_cast<std::size_t>(m) * n / static_cast<std::size_t>(d * d);
            acc = acc + w(d) * f[idx];
        }
        out[n] = acc;
    }
    return QSeries<K>(std::move(out));
}

/// Level 1, trivial character.
template <CoefficientField K>
QSeries<K> hecke_action(const QSeries<K>& f, std::int64_t m, int k, std::size_t prec) {
    const K like = f.zero_coeff();
    return hecke_action_weighted(f, m, prec, [&](std::int64_t d) {
        return field_traits<K>::from_rational_like(like, Rational(ipow(Integer(d), static_cast<unsigned>(k - 1))));
    });
}

/// Character chi mod N; coefficients must lie in a cyclotomic field containing the values of chi
/// (or in Q when chi is quadratic or trivial).
template <CoefficientField K>
QSeries<K> hecke_action(const QSeries<K>& f, std::int64_t m, int k, const DirichletCharacter& chi, std::size_t prec) {
    const K like = f.zero_coeff();
    return hecke_action_weighted(f, m, prec, [&](std::int64_t d) -> K {
        const Rational pw(ipow(Integer(d), static_cast<unsigned>(k - 1)));
        if constexpr (std::is_same_v<K, Rational>) {
            return chi.rational_value(d) * pw;
        } else {
            if (chi.order() <= 2) return like.parent().from_rational(chi.rational_value(d) * pw);
            return chi.value_in(like.parent(), d) * pw;
        }
    });
}

/// Precision needed from the basis to read T_n off the echelon cusp basis.
inline std::size_t hecke_basis_precision(int n, int k) {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(dim_Sk(k) + 1) + 1;
}

/// T_n on a cusp basis whose i-th form is q^{i+1} + O(q^{d+1}).
inline RatMatrix hecke_matrix_on(const SpaceBasis& basis, int n) {
    const std::size_t d = basis.size();
    RatMatrix m(d, d, Rational(0));
    for (std::size_t j = 0; j < d; ++j) {
        auto img = hecke_action(basis[j], n, basis.weight, d + 1);
        for (std::size_t i = 0; i < d; ++i) m(i, j) = img[i + 1];
    }
    return m;
}

inline HeckeMatrix hecke_matrix(int n, int k, std::size_t prec = 0) {
    if (dim_Sk(k) < 1) throw std::invalid_argument("hecke_matrix: S_" + std::to_string(k) + " is zero");
    const std::size_t need = hecke_basis_precision(n, k);
    if (prec == 0) prec = need;
    if (prec < need)
        throw std::invalid_argument("hecke_matrix: precision " + std::to_string(prec) + " < required " + std::to_string(need));
    auto basis = miller_basis(k, prec, true);
    return {n, k, hecke_matrix_on(basis, n)};
}

inline RatPoly charpoly(const HeckeMatrix& m) { return charpoly(m.entries); }

/// Matrix of T_n in the basis {Delta^j E_4^{k/4-3j}}; available when 4 | k.
inline RatMatrix hecke_matrix_delta_e4_basis(int n, int k) {
    const std::size_t d = static_cast<std::size_t>(dim_Sk(k));
    const std::size_t prec = static_cast<std::size_t>(n) * (d + 1) + 1;
    auto basis = delta_e4_cusp_basis(k, prec);
    // coordinates against this basis are read from q^1..q^d (unipotent triangular system)
    RatMatrix coef(d, d, Rational(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) coef(i, j) = basis[j][i + 1];
    RatMatrix m(d, d, Rational(0));
    for (std::size_t j = 0; j < d; ++j) {
        auto img = hecke_action(basis[j], n, k, d + 1);
        std::vector<Rational> rhs;
        for (std::size_t i = 0; i < d; ++i) rhs.push_back(img[i + 1]);
        auto x = coef.solve(rhs);
        for (std::size_t i = 0; i < d; ++i) m(i, j) = x[i];
    }
    return m;
}

inline bool is_integral(const RatMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (den(m(i, j)) != 1) return false;
    return true;
}

/// Normalized cusp eigenform over K = Q[x]/(T_{n,k}); the image of x is a_n.
struct Eigenform {
    int weight = 0;
    int hecke_index = 2;
    NumberField field = NumberField::rationals();
    RatPoly charpoly;
    NFSeries series{std::vector<NumberFieldElement>{NumberField::rationals().zero()}};
    /// Coordinates of the eigenvector in the echelon cusp basis (equal to a_1..a_d).
    std::vector<NumberFieldElement> coords;
    /// T_{hecke_index} on the echelon cusp basis.
    RatMatrix hecke{0, 0, Rational(0)};

    const NumberFieldElement& a(std::size_t n) const { return series[n]; }
};

namespace detail {

inline NFSeries combine(const SpaceBasis& basis, const std::vector<NumberFieldElement>& v, const NumberField& field) {
    const std::size_t prec = basis[0].prec();
    std::vector<NumberFieldElement> c(prec, field.zero());
    for (std::size_t j = 0; j < v.size(); ++j)
        for (std::size_t n = 0; n < prec; ++n)
            if (basis[j][n] != 0) c[n] += v[j] * basis[j][n];
    return NFSeries(std::move(c));
}

}  // namespace detail

struct EigenbasisOptions {
    std::vector<int> hecke_indices{2, 3, 5};
    IrreducibilityOptions irreducibility{};
};

/// One normalized eigenform over the Hecke field; its conjugates are implicit.
inline Eigenform eigenbasis(int k, std::size_t prec = 0, const EigenbasisOptions& opt = {}) {
    const int d = dim_Sk(k);
    if (d < 1) throw std::invalid_argument("eigenbasis: S_" + std::to_string(k) + " is zero");
    if (prec == 0) prec = static_cast<std::size_t>(3 * d + 5);
    if (prec < static_cast<std::size_t>(d + 1)) throw std::invalid_argument("eigenbasis: precision must exceed dim S_k");
    int maxn = 1;
    for (int n : opt.hecke_indices) maxn = std::max(maxn, n);
    const std::size_t bprec = std::max(prec, hecke_basis_precision(maxn, k));
    auto basis = miller_basis(k, bprec, true);

    Eigenform e;
    e.weight = k;
    if (d == 1) {
        e.hecke_index = 2;
        e.field = NumberField::rationals();
        e.coords = {e.field.one()};
        e.charpoly = RatPoly{-basis[0][2], Rational(1)};
        e.hecke = hecke_matrix_on(basis, 2);
        e.series = embed(basis[0].truncate(prec), e.field);
        return e;
    }
    std::string why;
    for (int n : opt.hecke_indices) {
        RatMatrix m = hecke_matrix_on(basis, n);
        RatPoly t = charpoly(m);
        auto cert = poly_irreducible(t, opt.irreducibility);
        if (cert.verdict == IrreducibilityVerdict::Reducible)
            throw Unsupported("eigenbasis: T_" + std::to_string(n) + " charpoly in weight " + std::to_string(k) +
                              " is reducible (" + cert.reason + ")");
        if (cert.verdict != IrreducibilityVerdict::Irreducible) {
            why += "T_" + std::to_string(n) + " inconclusive; ";
            continue;
        }
        NumberField field = NumberField::create(t, cert, "a" + std::to_string(n));
        const auto alpha = field.generator();
        Matrix<NumberFieldElement> a(static_cast<std::size_t>(d), static_cast<std::size_t>(d), field.zero());
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) a(i, j) = field.from_rational(m(i, j)) - (i == j ? alpha : field.zero());
        auto ns = a.nullspace();
        if (ns.size() != 1) throw std::logic_error("eigenbasis: eigenspace over the Hecke field is not one-dimensional");
        auto v = ns[0];
        if (v[0].is_zero()) throw std::logic_error("eigenbasis: eigenvector has a_1 = 0");
        const auto inv0 = v[0].inv();
        for (auto& x : v) x = x * inv0;
        e.hecke_index = n;
        e.field = field;
        e.charpoly = t;
        e.coords = v;
        e.hecke = m;
        auto bt = basis;
        for (auto& f : bt.forms) f.series = f.series.truncate(prec);
        e.series = detail::combine(bt, v, field);
        return e;
    }
    throw Unsupported("eigenbasis: no irreducibility certificate in weight " + std::to_string(k) + " (" + why + ")");
}

/// Coefficientwise conjugation in a quadratic Hecke field.
inline Eigenform galois_conjugate(const Eigenform& f) {
    if (f.field.degree() > 2) throw Unsupported("galois_conjugate: only fields of degree <= 2 are supported");
    Eigenform g = f;
    g.series = f.series.map([](const NumberFieldElement& x) { return x.conjugate(); });
    for (auto& x : g.coords) x = x.conjugate();
    return g;
}

}  // namespace mfid
