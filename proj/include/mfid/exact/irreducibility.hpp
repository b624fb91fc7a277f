#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mfid/exact/integer.hpp"
#include "mfid/exact/polymodp.hpp"
#include "mfid/exact/ratpoly.hpp"

namespace mfid {

/// Degrees of the irreducible factors of p modulo the prime q, ascending.
/// q must not divide the leading coefficient or the discriminant.
inline std::vector<int> poly_factor_degrees_mod_p(const RatPoly& p, std::uint64_t q) {
    if (p.degree() < 1) throw std::invalid_argument("poly_factor_degrees_mod_p: degree must be >= 1");
    if (!is_prime_u64(q)) throw std::invalid_argument("poly_factor_degrees_mod_p: modulus is not prime");
    auto ints = primitive_integer_coeffs(p);
    if (ints.back() % q == 0) throw std::invalid_argument("poly_factor_degrees_mod_p: prime divides leading coefficient");
    modp::Poly f = modp::reduce(ints, q);
    if (!modp::is_squarefree(f)) throw std::invalid_argument("poly_factor_degrees_mod_p: prime divides discriminant");
    auto d = modp::factor_degrees(f);
    std::sort(d.begin(), d.end());
    return d;
}

/// Whether q is usable for degree patterns: q does not divide lead(p) or disc(p).
inline bool is_good_prime(const std::vector<Integer>& int_coeffs, const Integer& disc_num, std::uint64_t q) {
    return int_coeffs.back() % q != 0 && disc_num % q != 0;
}

enum class IrreducibilityVerdict { Irreducible, Reducible, Unknown };

inline const char* to_string(IrreducibilityVerdict v) {
    switch (v) {
        case IrreducibilityVerdict::Irreducible: return "Irreducible";
        case IrreducibilityVerdict::Reducible: return "Reducible";
        default: return "Unknown";
    }
}

struct IrreducibilityCertificate {
    IrreducibilityVerdict verdict = IrreducibilityVerdict::Unknown;
    std::string reason;
    std::optional<std::uint64_t> witness_prime;   // single factor modulo this prime
    std::vector<std::uint64_t> pattern_primes;    // primes whose degree patterns jointly forbid factors
    std::optional<Rational> root;                 // exhibited rational root
    std::optional<RatPoly> factor;                // exhibited proper factor

    bool irreducible() const { return verdict == IrreducibilityVerdict::Irreducible; }
};

struct IrreducibilityOptions {
    int num_primes = 60;
    std::uint64_t root_scan_divisor_bound = 200'000;  // cap on candidate count for the rational-root scan
};

namespace detail {

inline std::optional<std::vector<Integer>> all_divisors(const Integer& n, std::size_t cap) {
    Factorization f = factor_trial(n, 1'000'000);
    if (!f.complete()) return std::nullopt;
    std::vector<Integer> ds{1};
    for (const auto& [p, e] : f.primes) {
        std::vector<Integer> next;
        for (const auto& d : ds) {
            Integer pk = 1;
            for (unsigned i = 0; i <= e; ++i, pk *= p) next.push_back(d * pk);
        }
        ds = std::move(next);
        if (ds.size() > cap) return std::nullopt;
    }
    return ds;
}

/// Rational-root theorem scan. Returns nullopt in `complete` when the scan could not be run.
struct RootScan {
    bool complete = false;
    std::optional<Rational> root;
};

inline RootScan rational_root_scan(const RatPoly& p, std::uint64_t cap) {
    auto c = primitive_integer_coeffs(p);
    if (c.front() == 0) return {true, Rational(0)};
    auto num_divs = all_divisors(c.front(), cap);
    auto den_divs = all_divisors(c.back(), cap);
    if (!num_divs || !den_divs || num_divs->size() * den_divs->size() > cap) return {};
    for (const auto& d : *den_divs) {
        for (const auto& n : *num_divs) {
            for (int s : {1, -1}) {
                Rational r(Integer(s * n), d);
                if (p(r) == 0) return {true, r};
            }
        }
    }
    return {true, std::nullopt};
}

}  // namespace detail

/// Exhibited rational roots of p (complete list when the rational-root scan is feasible).
inline std::optional<std::vector<Rational>> rational_roots(const RatPoly& p, std::uint64_t cap = 200'000) {
    std::vector<Rational> roots;
    RatPoly rest = p;
    while (rest.degree() >= 1) {
        auto scan = detail::rational_root_scan(rest, cap);
        if (!scan.complete) return std::nullopt;
        if (!scan.root) break;
        roots.push_back(*scan.root);
        rest = rest / RatPoly{-*scan.root, Rational(1)};
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

/// One-sided irreducibility certificate over Q.
inline IrreducibilityCertificate poly_irreducible(const RatPoly& p, const IrreducibilityOptions& opt = {}) {
    using V = IrreducibilityVerdict;
    const int d = p.degree();
    if (d < 1) throw std::invalid_argument("poly_irreducible: degree must be >= 1");
    IrreducibilityCertificate cert;
    if (d == 1) {
        cert.verdict = V::Irreducible;
        cert.reason = "linear";
        return cert;
    }
    RatPoly g = gcd(p, p.derivative());
    if (g.degree() > 0) {
        cert.verdict = V::Reducible;
        cert.reason = "repeated factor";
        cert.factor = g;
        return cert;
    }
    auto scan = detail::rational_root_scan(p, opt.root_scan_divisor_bound);
    if (scan.root) {
        cert.verdict = V::Reducible;
        cert.reason = "rational root";
        cert.root = scan.root;
        cert.factor = RatPoly{-*scan.root, Rational(1)};
        return cert;
    }
    if (scan.complete && d <= 3) {
        cert.verdict = V::Irreducible;
        cert.reason = "no rational root, degree <= 3";
        return cert;
    }

    auto ints = primitive_integer_coeffs(p);
    Integer disc = num(poly_discriminant(p));
    std::set<int> possible;  // proper factor degrees still compatible with every pattern so far
    for (int i = 1; i < d; ++i) possible.insert(i);
    int used = 0;
    for (std::uint64_t q = 2; used < opt.num_primes && q < 100'000; ++q) {
        if (!is_prime_u64(q) || !is_good_prime(ints, disc, q)) continue;
        ++used;
        auto degs = modp::factor_degrees(modp::reduce(ints, q));
        if (degs.size() == 1) {
            cert.verdict = V::Irreducible;
            cert.reason = "irreducible modulo a good prime";
            cert.witness_prime = q;
            return cert;
        }
        std::set<int> sums{0};
        for (int k : degs) {
            std::set<int> next = sums;
            for (int s : sums) next.insert(s + k);
            sums = std::move(next);
        }
        std::set<int> keep;
        for (int s : possible)
            if (sums.count(s)) keep.insert(s);
        possible = std::move(keep);
        cert.pattern_primes.push_back(q);
        if (possible.empty()) {
            cert.verdict = V::Irreducible;
            cert.reason = "degree patterns admit no proper factor";
            return cert;
        }
    }
    cert.pattern_primes.clear();
    cert.reason = "inconclusive";
    return cert;
}

enum class DedekindVerdict { IndexDivisor, NotIndexDivisor };

inline const char* to_string(DedekindVerdict v) {
    return v == DedekindVerdict::IndexDivisor ? "IndexDivisor" : "NotIndexDivisor";
}

/// Dedekind's criterion: does q divide [O_K : Z[alpha]] for K = Q[x]/(p)?
inline DedekindVerdict dedekind_index_test(const RatPoly& p, std::uint64_t q) {
    if (!p.is_monic() || !has_integer_coeffs(p))
        throw std::invalid_argument("dedekind_index_test: polynomial must be monic with integer coefficients");
    if (!is_prime_u64(q)) throw std::invalid_argument("dedekind_index_test: modulus is not prime");
    std::vector<Integer> f;
    for (const auto& c : p.coeffs()) f.push_back(num(c));
    modp::Poly fbar = modp::reduce(f, q);
    modp::Poly gbar = modp::radical(fbar);
    modp::Poly hbar = modp::divmod(fbar, gbar).first;

    // F = (g*h - f)/q with g, h the canonical lifts.
    std::vector<Integer> gh(gbar.c.size() + hbar.c.size() - 1, Integer(0));
    for (std::size_t i = 0; i < gbar.c.size(); ++i)
        for (std::size_t j = 0; j < hbar.c.size(); ++j) gh[i + j] += Integer(gbar.c[i]) * Integer(hbar.c[j]);
    std::vector<Integer> big(std::max(gh.size(), f.size()), Integer(0));
    for (std::size_t i = 0; i < big.size(); ++i) {
        Integer diff = (i < gh.size() ? gh[i] : Integer(0)) - (i < f.size() ? f[i] : Integer(0));
        if (diff % q != 0) throw std::logic_error("dedekind_index_test: lift is not congruent");
        big[i] = diff / q;
    }
    modp::Poly fq = modp::reduce(big, q);
    modp::Poly common = modp::gcd(modp::gcd(fq, gbar), hbar);
    return common.degree() > 0 ? DedekindVerdict::IndexDivisor : DedekindVerdict::NotIndexDivisor;
}

}  // namespace mfid
