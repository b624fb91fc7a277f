#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/special_functions/zeta.hpp>

#include "mfid/dirichlet.hpp"
#include "mfid/forms.hpp"
#include "mfid/hecke.hpp"
#include "mfid/numeric.hpp"

namespace mfid {

// ---------------------------------------------------------------------------
// alpha, beta

struct AlphaBeta {
    NumberFieldElement alpha;
    NumberFieldElement beta;
};

/// beta = -2k / B_{k,phi}, alpha = -4k / B_{2k,phi^2} (phi^2 replaced by its primitive inducing character),
/// both in Q(zeta_m), m = order(phi).
inline AlphaBeta alpha_beta(int k, const DirichletCharacter& phi) {
    if (k < 1) throw std::invalid_argument("alpha_beta: k must be positive");
    if (phi.parity() != (k % 2 == 0 ? 1 : -1))
        throw std::invalid_argument("alpha_beta: phi(-1) != (-1)^k, B_{k,phi} vanishes");
    const int m = static_cast<int>(phi.order());
    const auto bk = cyclotomic_lift(gen_bernoulli(static_cast<unsigned>(k), phi), m);
    const auto b2k = cyclotomic_lift(gen_bernoulli(static_cast<unsigned>(2 * k), inducing_primitive(phi.pow(2))), m);
    if (bk.is_zero()) throw std::domain_error("alpha_beta: B_{k,phi} = 0");
    if (b2k.is_zero()) throw std::domain_error("alpha_beta: B_{2k,phi^2} = 0");
    return {bk.parent().from_rational(Rational(-4 * k)) * b2k.inv(), bk.parent().from_rational(Rational(-2 * k)) * bk.inv()};
}

// ---------------------------------------------------------------------------
// Bound (13)

namespace detail {

inline Real zeta(int s) { return boost::math::zeta(Real(s)); }

// k! (2 pi)^{-k}
inline Real fact_over_2pi(int k) { return to_real(Rational(factorial(static_cast<unsigned>(k)))) / pow(2 * pi<Real>(), k); }

// |x| under zeta_m -> e^{2 pi i/m}, 250-digit accumulation
inline Real abs_wide(const NumberFieldElement& x) {
    const auto& f = x.parent();
    if (f.degree() == 1) return to_real(rabs(x.coords()[0]));
    const int m = f.cyclotomic_order();
    if (m <= 0) throw std::invalid_argument("abs_wide: element is not in a cyclotomic field");
    const RealWide angle = 2 * pi<RealWide>() / m;
    ComplexWide z(0);
    const auto& c = x.coords();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        const RealWide t = angle * static_cast<long>(j);
        z += ComplexWide(cos(t), sin(t)) * to_real<RealWide>(c[j]);
    }
    return Real(abs(z));
}

}  // namespace detail

/// Constants c with c l^{k-1/2} the lower and upper bounds for |B_{k,chi}|.
inline Real bound_lower_constant(int k) { return 2 * detail::zeta(2 * k) / detail::zeta(k) * detail::fact_over_2pi(k); }
inline Real bound_upper_constant(int k) { return 2 * detail::zeta(k) * detail::fact_over_2pi(k); }

struct BoundCheck {
    int k = 0;
    std::int64_t conductor = 1;
    std::string character;
    bool holds = false;
    Real lower, upper, actual;
};

inline constexpr double kEmbedTol = 1e-12;

inline BoundCheck bernoulli_bound_check(int k, const DirichletCharacter& chi) {
    if (k < 3) throw std::invalid_argument("bernoulli_bound_check: k must be >= 3");
    if (!chi.is_primitive()) throw std::invalid_argument("bernoulli_bound_check: character must be primitive");
    if (chi.parity() != (k % 2 == 0 ? 1 : -1)) throw std::invalid_argument("bernoulli_bound_check: chi(-1) != (-1)^k");
    BoundCheck r;
    r.k = k;
    r.conductor = chi.modulus();
    r.character = chi.label();
    const Real lk = pow(Real(chi.modulus()), Real(k) - Real(0.5));
    r.lower = bound_lower_constant(k) * lk;
    r.upper = bound_upper_constant(k) * lk;
    r.actual = detail::abs_wide(gen_bernoulli(static_cast<unsigned>(k), chi));
    const Real slack = 1 + Real(kEmbedTol);
    r.holds = r.lower <= r.actual * slack && r.actual <= r.upper * slack;
    return r;
}

// ---------------------------------------------------------------------------
// Finiteness scan

struct FinitenessCell {
    int k = 0;
    std::int64_t conductor = 1;
    std::string character;
    double abs_alpha = 0, abs_beta = 0;
    std::string excluded_by;  // parity, imprimitive-square, bound, exact, survivor
};

struct FinitenessRow {
    int k = 0;
    double envelope = 0;  // upper bound for |alpha| + 2|beta| over all conductors
    std::int64_t l_star = 0;
    std::int64_t enumerated_to = 0;
    bool complete = true;
};

struct Survivor {
    int k = 0;
    std::int64_t conductor = 1;
    std::string character, alpha, beta;
    bool reverified = false;
};

struct FinitenessReport {
    Rational a, b;
    int k_bound = 2;
    int k_max = 0;
    std::int64_t l_max = 0;
    std::vector<FinitenessRow> rows;
    std::vector<FinitenessCell> cells;
    std::vector<Survivor> survivors;
    bool monotone_envelope = false;
    int monotone_checked_to = 0;
    bool complete = true;

    std::string csv() const {
        std::ostringstream os;
        os << "k,conductor,character,abs_alpha,abs_beta,excluded_by\n";
        os.precision(12);
        for (const auto& c : cells)
            os << c.k << ',' << c.conductor << ',' << c.character << ',' << c.abs_alpha << ',' << c.abs_beta << ','
               << c.excluded_by << '\n';
        return os.str();
    }
};

struct FinitenessOptions {
    std::int64_t l_cap = 1000;
    int monotone_extra = 50;
};

/// Upper envelope of |alpha| + 2|beta| from the lower half of bound (13) with l = 1.
inline Real finiteness_envelope(int k) { return 4 * k / bound_lower_constant(2 * k) + 4 * k / bound_lower_constant(k); }

/// Least L with |beta| < |b|/4 and |alpha| < |b|/2 for every conductor l > L.
inline std::int64_t conductor_threshold(int k, const Rational& b, std::int64_t cap) {
    const Real bb = abs(to_real(b));
    const Real cb = 8 * k / (bound_lower_constant(k) * bb);
    const Real ca = 8 * k / (bound_lower_constant(2 * k) * bb);
    auto ok = [&](std::int64_t l) {
        return pow(Real(l), Real(k) - Real(0.5)) > cb && pow(Real(l), Real(2 * k) - Real(0.5)) > ca;
    };
    std::int64_t L = 0;
    while (!ok(L + 1)) {
        ++L;
        if (L > cap) return L;
    }
    return L;
}

inline FinitenessReport finiteness_scan(const Rational& a, const Rational& b, int k_max, std::int64_t l_max,
                                        const FinitenessOptions& opt = {}) {
    if (a == 0 || b == 0) throw std::invalid_argument("finiteness_scan: a and b must be nonzero");
    if (k_max < 3) throw std::invalid_argument("finiteness_scan: k_max must be >= 3");
    if (l_max < 1) throw std::invalid_argument("finiteness_scan: l_max must be >= 1");
    FinitenessReport rep;
    rep.a = a;
    rep.b = b;
    rep.k_max = k_max;
    rep.l_max = l_max;
    const Real bb = abs(to_real(b));

    // k_bound: last k whose envelope reaches |b|; past k = 8 the envelope decreases
    int k = 3;
    for (;; ++k) {
        if (finiteness_envelope(k) >= bb) rep.k_bound = k;
        else if (k >= 8) break;
    }
    rep.monotone_checked_to = std::max(rep.k_bound, k_max) + opt.monotone_extra;
    rep.monotone_envelope = true;
    Real prev = finiteness_envelope(8);
    for (int j = 9; j <= rep.monotone_checked_to; ++j) {
        const Real cur = finiteness_envelope(j);
        if (!(cur < prev)) rep.monotone_envelope = false;
        prev = cur;
    }

    for (k = 3; k <= k_max; ++k) {
        FinitenessRow row;
        row.k = k;
        row.envelope = static_cast<double>(finiteness_envelope(k));
        if (k > rep.k_bound) {
            rep.rows.push_back(row);
            continue;
        }
        row.l_star = conductor_threshold(k, b, opt.l_cap);
        row.enumerated_to = std::min(std::max(l_max, row.l_star), opt.l_cap);
        row.complete = row.l_star <= opt.l_cap;
        rep.complete = rep.complete && row.complete;
        for (std::int64_t l = 1; l <= row.enumerated_to; ++l) {
            for (const auto& phi : primitive_characters(l)) {
                FinitenessCell cell{k, l, phi.label(), 0, 0, ""};
                if (phi.parity() != (k % 2 == 0 ? 1 : -1)) {
                    cell.excluded_by = "parity";
                } else if (!phi.pow(2).is_primitive()) {
                    cell.excluded_by = "imprimitive-square";
                } else {
                    const auto ab = alpha_beta(k, phi);
                    const Real ra = detail::abs_wide(ab.alpha), rb = detail::abs_wide(ab.beta);
                    cell.abs_alpha = static_cast<double>(ra);
                    cell.abs_beta = static_cast<double>(rb);
                    const auto lhs = ab.beta.parent().from_rational(b) + ab.beta * Rational(2);
                    if (lhs == ab.alpha) {
                        cell.excluded_by = "survivor";
                        Survivor s{k, l, phi.label(), ab.alpha.str(), ab.beta.str(), false};
                        // independent recomputation through B directly
                        const auto bk = gen_bernoulli(static_cast<unsigned>(k), phi);
                        const auto b2k = gen_bernoulli(static_cast<unsigned>(2 * k), inducing_primitive(phi.pow(2)));
                        const auto lb = cyclotomic_lift(bk, static_cast<int>(phi.order()));
                        const auto l2 = cyclotomic_lift(b2k, static_cast<int>(phi.order()));
                        s.reverified = (lb.parent().from_rational(b) * lb - lb.parent().from_rational(Rational(4 * k))) * l2 ==
                                       lb * lb.parent().from_rational(Rational(-4 * k));
                        rep.survivors.push_back(s);
                    } else {
                        cell.excluded_by = ra + 2 * rb < bb ? "bound" : "exact";
                    }
                }
                rep.cells.push_back(cell);
            }
        }
        rep.rows.push_back(row);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Maeda-regime checks

struct MaedaReport {
    int k = 0;
    int dim = 0;
    int hecke_index = 2;
    RatPoly charpoly;
    IrreducibilityCertificate cert;
    Integer disc = 0;
    Integer disc_squarefree = 0;
    std::optional<Integer> quadratic_field_disc;
    std::vector<std::pair<std::uint64_t, std::vector<int>>> patterns;
    bool saw_full_cycle = false, saw_transposition = false, saw_odd_cycle = false;
    std::string sn_evidence;
};

struct MaedaOptions {
    std::vector<int> n_list{2, 3, 5};
    int num_primes = 30;
    IrreducibilityOptions irreducibility{};
};

inline MaedaReport maeda_check(int k, const MaedaOptions& opt = {}) {
    const int d = dim_Sk(k);
    if (d < 1) throw std::invalid_argument("maeda_check: S_" + std::to_string(k) + " is zero");
    MaedaReport rep;
    rep.k = k;
    rep.dim = d;
    if (opt.n_list.empty()) throw std::invalid_argument("maeda_check: empty Hecke index list");
    for (int n : opt.n_list) {
        rep.hecke_index = n;
        rep.charpoly = charpoly(hecke_matrix(n, k));
        rep.cert = poly_irreducible(rep.charpoly, opt.irreducibility);
        if (rep.cert.verdict != IrreducibilityVerdict::Unknown) break;
    }
    if (d == 1) {
        rep.sn_evidence = "S_1 (dim S_k = 1)";
        return rep;
    }
    rep.disc = num(poly_discriminant(rep.charpoly)) * den(poly_discriminant(rep.charpoly));
    if (rep.disc != 0) {
        auto sq = squarefree_kernel(rep.disc);
        rep.disc_squarefree = sq.kernel;
        if (d == 2 && sq.complete && sq.kernel != 1) rep.quadratic_field_disc = quad_field_discriminant(sq.kernel);
    }
    if (!rep.cert.irreducible()) {
        rep.sn_evidence = "Unknown";
        return rep;
    }
    const auto ints = primitive_integer_coeffs(rep.charpoly);
    const Integer dn = num(poly_discriminant(RatPoly(std::vector<Rational>(ints.begin(), ints.end()))));
    for (std::uint32_t q : primes_below(100'000)) {
        if (static_cast<int>(rep.patterns.size()) >= opt.num_primes) break;
        if (!is_good_prime(ints, dn, q)) continue;
        auto pat = poly_factor_degrees_mod_p(rep.charpoly, q);
        int nontrivial = 0, twos = 0, odd = 0;
        for (int e : pat) {
            if (e > 1) ++nontrivial;
            if (e == 2) ++twos;
            if (e > 1 && e % 2 == 1) ++odd;
        }
        if (pat.size() == 1) rep.saw_full_cycle = true;
        if (nontrivial == 1 && twos == 1) rep.saw_transposition = true;
        if (nontrivial == 1 && odd == 1) rep.saw_odd_cycle = true;
        rep.patterns.emplace_back(q, std::move(pat));
    }
    if (d == 2)
        rep.sn_evidence = "S_2 (irreducible quadratic)";
    else if (rep.saw_full_cycle && rep.saw_transposition && rep.saw_odd_cycle)
        rep.sn_evidence = "consistent with S_" + std::to_string(d) + " (heuristic)";
    else
        rep.sn_evidence = "Unknown";
    return rep;
}

struct SharedPrime {
    Integer p;
    DedekindVerdict side1 = DedekindVerdict::NotIndexDivisor, side2 = DedekindVerdict::NotIndexDivisor;
    bool unramified1 = false, unramified2 = false;  // certified p does not divide the field discriminant
    bool ramified1 = false, ramified2 = false;      // certified p divides the field discriminant
    std::string verdict;                            // excluded, shared, Unknown
};

struct IntersectionReport {
    int k = 0;
    int dim1 = 0, dim2 = 0;
    RatPoly t1, t2;
    IrreducibilityVerdict irr1 = IrreducibilityVerdict::Unknown, irr2 = IrreducibilityVerdict::Unknown;
    Integer disc1 = 0, disc2 = 0, g = 0;
    Factorization gfac;
    std::optional<Integer> quad_field_disc1, quad_field_disc2;
    std::vector<SharedPrime> primes;
    std::string verdict;  // coprime, not coprime, Unknown

    bool coprime() const { return verdict == "coprime"; }
};

namespace detail {

inline std::optional<Integer> quadratic_field_disc(const RatPoly& t) {
    if (t.degree() != 2) return std::nullopt;
    const Rational dq = poly_discriminant(t);
    auto sq = squarefree_kernel(num(dq) * den(dq));
    if (!sq.complete || sq.kernel == 1) return std::nullopt;
    return quad_field_discriminant(sq.kernel);
}

inline Integer integer_disc(const RatPoly& t) {
    const auto ints = primitive_integer_coeffs(t);
    return num(poly_discriminant(RatPoly(std::vector<Rational>(ints.begin(), ints.end()))));
}

}  // namespace detail

/// Hecke fields of weights k and 2k: shared primes of the polynomial discriminants, settled one by one.
inline IntersectionReport hecke_field_intersection_check(int k, std::uint64_t trial_bound = 1'000'000) {
    IntersectionReport rep;
    rep.k = k;
    rep.dim1 = dim_Sk(k);
    rep.dim2 = dim_Sk(2 * k);
    if (rep.dim1 < 1) throw std::invalid_argument("hecke_field_intersection_check: S_" + std::to_string(k) + " is zero");
    if (rep.dim1 == 1 || rep.dim2 == 1) {
        rep.verdict = "coprime";
        return rep;
    }
    rep.t1 = charpoly(hecke_matrix(2, k));
    rep.t2 = charpoly(hecke_matrix(2, 2 * k));
    rep.irr1 = poly_irreducible(rep.t1).verdict;
    rep.irr2 = poly_irreducible(rep.t2).verdict;
    if (rep.irr1 != IrreducibilityVerdict::Irreducible || rep.irr2 != IrreducibilityVerdict::Irreducible) {
        rep.verdict = "Unknown";
        return rep;
    }
    rep.disc1 = detail::integer_disc(rep.t1);
    rep.disc2 = detail::integer_disc(rep.t2);
    rep.g = boost::multiprecision::gcd(iabs(rep.disc1), iabs(rep.disc2));
    rep.quad_field_disc1 = detail::quadratic_field_disc(rep.t1);
    rep.quad_field_disc2 = detail::quadratic_field_disc(rep.t2);
    rep.gfac = factor_trial(rep.g, trial_bound);
    bool unknown = !rep.gfac.complete();
    bool shared = false;
    for (const auto& [p, e] : rep.gfac.primes) {
        SharedPrime sp;
        sp.p = p;
        const auto q = static_cast<std::uint64_t>(p);
        sp.side1 = dedekind_index_test(rep.t1, q);
        sp.side2 = dedekind_index_test(rep.t2, q);
        // not an index divisor: v_p(field disc) = v_p(poly disc) > 0
        sp.ramified1 = sp.side1 == DedekindVerdict::NotIndexDivisor;
        sp.ramified2 = sp.side2 == DedekindVerdict::NotIndexDivisor;
        if (rep.quad_field_disc1) {
            sp.unramified1 = *rep.quad_field_disc1 % p != 0;
            sp.ramified1 = !sp.unramified1;
        }
        if (rep.quad_field_disc2) {
            sp.unramified2 = *rep.quad_field_disc2 % p != 0;
            sp.ramified2 = !sp.unramified2;
        }
        if (sp.unramified1 || sp.unramified2) {
            sp.verdict = "excluded";
        } else if (sp.ramified1 && sp.ramified2) {
            sp.verdict = "shared";
            shared = true;
        } else {
            sp.verdict = "Unknown";
            unknown = true;
        }
        rep.primes.push_back(sp);
    }
    rep.verdict = shared ? "not coprime" : unknown ? "Unknown" : "coprime";
    return rep;
}

}  // namespace mfid
