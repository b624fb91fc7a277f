#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace mfid {

using Integer = boost::multiprecision::mpz_int;

/// Thrown when an operation is asked to leave the regime it supports
/// (e.g. an eigenbasis over a reducible Hecke polynomial).
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Integer ipow(Integer base, unsigned exp) {
    Integer r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

inline Integer iabs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline std::uint64_t mod_u64(const Integer& a, std::uint64_t m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r.convert_to<std::uint64_t>();
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1u) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1u;
    }
    return r;
}

inline std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

inline std::int64_t lcm_i64(std::int64_t a, std::int64_t b) { return a / gcd_i64(a, b) * b; }

/// Inverse of a modulo m (gcd(a, m) must be 1).
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), newr = static_cast<std::int64_t>(a % m);
    while (newr != 0) {
        std::int64_t q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw std::domain_error("invmod: not invertible");
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

/// Probable-prime test (GMP Miller-Rabin, 30 rounds; deterministic below 2^64 in practice).
inline bool is_probable_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.backend().data(), 30) > 0;
}

inline bool is_prime_u64(std::uint64_t n) { return is_probable_prime(Integer(n)); }

/// Primes below `limit` by a plain sieve.
inline std::vector<std::uint32_t> primes_below(std::uint32_t limit) {
    std::vector<bool> composite(limit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j < limit; j += i) composite[j] = true;
    }
    return out;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Integer square root; returns (floor(sqrt(n)), exact?) for n >= 0.
inline std::pair<Integer, bool> isqrt_exact(const Integer& n) {
    if (n < 0) return {Integer(0), false};
    Integer r = boost::multiprecision::sqrt(n);
    return {r, r * r == n};
}

// ---------------------------------------------------------------------------
// Factorization: trial division to a bound, then bounded Pollard rho.

struct FactorOptions {
    std::uint64_t trial_bound = 1'000'000;
    std::uint64_t rho_iterations = 200'000;
};

struct Factorization {
    std::vector<std::pair<Integer, unsigned>> primes;  // ascending
    Integer unfactored = 1;                            // composite cofactor left over (1 when complete)
    bool complete() const { return unfactored == 1; }
};

namespace detail {

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
inline Integer pollard_rho(const Integer& n, std::uint64_t max_iter, unsigned seed) {
    if (n % 2 == 0) return Integer(2);
    Integer c = seed + 1;
    Integer y = 2, x, g = 1, q = 1, ys;
    std::uint64_t r = 1, iter = 0;
    const std::uint64_t m = 128;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = f(y);
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                q = (q * iabs(Integer(x - y))) % n;
            }
            g = boost::multiprecision::gcd(q, n);
            k += m;
            iter += m;
            if (iter > max_iter) return Integer(0);
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = boost::multiprecision::gcd(iabs(Integer(x - ys)), n);
        } while (g == 1);
    }
    return g == n ? Integer(0) : g;
}

inline void add_prime(std::vector<std::pair<Integer, unsigned>>& v, const Integer& p, unsigned e) {
    for (auto& [q, k] : v) {
        if (q == p) {
            k += e;
            return;
        }
    }
    v.emplace_back(p, e);
}

inline void split(const Integer& n, const FactorOptions& opt, Factorization& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        add_prime(out.primes, n, 1);
        return;
    }
    for (unsigned seed = 0; seed < 4; ++seed) {
        Integer d = pollard_rho(n, opt.rho_iterations, seed);
        if (d != 0) {
            split(d, opt, out);
            split(Integer(n / d), opt, out);
            return;
        }
    }
    out.unfactored *= n;
}

}  // namespace detail

/// Factor |n| (n != 0). Never guesses: anything not split is left in `unfactored`.
inline Factorization factor(const Integer& n, const FactorOptions& opt = {}) {
    if (n == 0) throw std::invalid_argument("factor: zero");
    Factorization out;
    Integer m = iabs(n);
    for (std::uint64_t p = 2; p <= opt.trial_bound && Integer(p) * p <= m; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) out.primes.emplace_back(Integer(p), e);
    }
    if (m != 1) {
        if (Integer(opt.trial_bound) * opt.trial_bound >= m) {
            out.primes.emplace_back(m, 1);
        } else {
            Factorization tail;
            detail::split(m, opt, tail);
            for (auto& pe : tail.primes) detail::add_prime(out.primes, pe.first, pe.second);
            out.unfactored = tail.unfactored;
        }
    }
    std::sort(out.primes.begin(), out.primes.end());
    return out;
}

/// Trial division only, up to `bound`; the remaining cofactor is left unfactored
/// unless it is 1 or provably prime (below bound^2).
inline Factorization factor_trial(const Integer& n, std::uint64_t bound) {
    Factorization out;
    Integer m = iabs(n);
    for (std::uint64_t p = 2; p <= bound && Integer(p) * p <= m; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) out.primes.emplace_back(Integer(p), e);
    }
    if (m != 1) {
        if (Integer(bound) * bound >= m)
            out.primes.emplace_back(m, 1);
        else
            out.unfactored = m;
    }
    return out;
}

struct SquarefreeKernel {
    Integer kernel;       // squarefree part s, carries the sign of n
    Integer square_root;  // f > 0 with n = s * f^2
    bool complete = true; // false when a composite cofactor could not be split
};

/// Write n = s * f^2 with s squarefree. Partial factorizations are flagged,
/// and the unsplit cofactor is kept inside s.
inline SquarefreeKernel squarefree_kernel(const Integer& n, const FactorOptions& opt = {}) {
    if (n == 0) throw std::invalid_argument("squarefree_kernel: zero");
    Factorization fac = factor(n, opt);
    SquarefreeKernel out{n < 0 ? Integer(-1) : Integer(1), Integer(1), fac.complete()};
    for (const auto& [p, e] : fac.primes) {
        if (e % 2) out.kernel *= p;
        out.square_root *= ipow(p, e / 2);
    }
    out.kernel *= fac.unfactored;
    return out;
}

/// Discriminant of Q(sqrt(D)) for squarefree D != 0, 1.
inline Integer quad_field_discriminant(const Integer& d) {
    if (d == 0 || d == 1) throw std::invalid_argument("quad_field_discriminant: D must not be 0 or 1");
    SquarefreeKernel k = squarefree_kernel(d);
    if (!k.complete || k.square_root != 1)
        throw std::invalid_argument("quad_field_discriminant: D is not squarefree");
    Integer r = d % 4;
    if (r < 0) r += 4;
    return r == 1 ? d : Integer(4 * d);
}

inline std::string factorization_string(const Factorization& f) {
    std::string s;
    for (const auto& [p, e] : f.primes) {
        if (!s.empty()) s += " * ";
        s += p.str();
        if (e > 1) s += "^" + std::to_string(e);
    }
    if (!f.complete()) s += (s.empty() ? "" : " * ") + std::string("[") + f.unfactored.str() + "]";
    return s.empty() ? "1" : s;
}

}  // namespace mfid
