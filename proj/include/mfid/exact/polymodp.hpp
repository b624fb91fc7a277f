#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mfid/exact/integer.hpp"
#include "mfid/exact/ratpoly.hpp"

namespace mfid::modp {

/// Dense polynomial over F_p, ascending, trimmed. p < 2^63.
struct Poly {
    std::uint64_t p = 2;
    std::vector<std::uint64_t> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    std::uint64_t lead() const { return c.empty() ? 0 : c.back(); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.p == b.p && a.c == b.c; }
};

inline Poly make(std::uint64_t p, std::vector<std::uint64_t> c) {
    for (auto& v : c) v %= p;
    Poly r{p, std::move(c)};
    r.trim();
    return r;
}

/// Reduce an integer-coefficient polynomial modulo p.
inline Poly reduce(const std::vector<Integer>& coeffs, std::uint64_t p) {
    std::vector<std::uint64_t> c;
    c.reserve(coeffs.size());
    for (const auto& a : coeffs) c.push_back(mod_u64(a, p));
    return make(p, std::move(c));
}

inline Poly add(const Poly& a, const Poly& b) {
    Poly r{a.p, std::vector<std::uint64_t>(std::max(a.c.size(), b.c.size()), 0)};
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        std::uint64_t x = i < a.c.size() ? a.c[i] : 0, y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = (x + y) % a.p;
    }
    r.trim();
    return r;
}

inline Poly sub(const Poly& a, const Poly& b) {
    Poly r{a.p, std::vector<std::uint64_t>(std::max(a.c.size(), b.c.size()), 0)};
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        std::uint64_t x = i < a.c.size() ? a.c[i] : 0, y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = (x + a.p - y) % a.p;
    }
    r.trim();
    return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {a.p, {}};
    Poly r{a.p, std::vector<std::uint64_t>(a.c.size() + b.c.size() - 1, 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = (r.c[i + j] + mulmod(a.c[i], b.c[j], a.p)) % a.p;
    r.trim();
    return r;
}

inline Poly scale(const Poly& a, std::uint64_t s) {
    Poly r = a;
    for (auto& v : r.c) v = mulmod(v, s, a.p);
    r.trim();
    return r;
}

inline Poly monic(const Poly& a) {
    if (a.is_zero()) return a;
    return scale(a, invmod(a.lead(), a.p));
}

inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("modp: division by zero polynomial");
    if (a.degree() < b.degree()) return {{a.p, {}}, a};
    std::vector<std::uint64_t> r = a.c;
    std::vector<std::uint64_t> q(a.c.size() - b.c.size() + 1, 0);
    const std::uint64_t inv = invmod(b.lead(), a.p);
    const std::size_t db = b.c.size() - 1;
    for (std::size_t i = q.size(); i-- > 0;) {
        std::uint64_t t = mulmod(r[i + db], inv, a.p);
        q[i] = t;
        if (!t) continue;
        for (std::size_t j = 0; j <= db; ++j) r[i + j] = (r[i + j] + a.p - mulmod(t, b.c[j], a.p)) % a.p;
    }
    r.resize(db);
    Poly qq{a.p, std::move(q)}, rr{a.p, std::move(r)};
    qq.trim();
    rr.trim();
    return {qq, rr};
}

inline Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

inline Poly derivative(const Poly& a) {
    Poly r{a.p, {}};
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c.push_back(mulmod(a.c[i], i % a.p, a.p));
    r.trim();
    return r;
}

/// base^e mod m.
inline Poly powmod(Poly base, Integer e, const Poly& m) {
    Poly r = mod(Poly{m.p, {1}}, m);
    base = mod(base, m);
    while (e > 0) {
        if ((e & 1) != 0) r = mod(mul(r, base), m);
        base = mod(mul(base, base), m);
        e >>= 1;
    }
    return r;
}

inline bool is_squarefree(const Poly& f) { return gcd(f, derivative(f)).degree() == 0; }

/// Degrees of the irreducible factors of a squarefree f (distinct-degree factorization).
inline std::vector<int> factor_degrees(const Poly& f_in) {
    Poly f = monic(f_in);
    std::vector<int> out;
    const Poly x{f.p, {0, 1}};
    Poly h = mod(x, f);
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = powmod(h, Integer(f.p), f);
        Poly g = gcd(f, sub(h, x));
        if (g.degree() > 0) {
            for (int i = 0; i < g.degree() / d; ++i) out.push_back(d);
            f = divmod(f, g).first;
            h = mod(h, f);
        }
    }
    if (f.degree() > 0) out.push_back(f.degree());
    return out;
}

/// Squarefree decomposition over F_p: returns pairs (g_i, i) with f = lead * prod g_i^i.
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f_in) {
    std::vector<std::pair<Poly, int>> out;
    const std::uint64_t p = f_in.p;
    auto rec = [&](auto&& self, const Poly& f, int mult) -> void {
        if (f.degree() < 1) return;
        Poly c = gcd(f, derivative(f));
        Poly w = divmod(f, c).first;
        int i = 1;
        while (w.degree() > 0) {
            Poly y = gcd(w, c);
            Poly z = divmod(w, y).first;
            if (z.degree() > 0) out.emplace_back(monic(z), i * mult);
            ++i;
            w = y;
            c = divmod(c, y).first;
        }
        if (c.degree() > 0) {
            // c is a polynomial in x^p; take the p-th root coefficientwise (Frobenius is trivial on F_p).
            Poly root{p, {}};
            for (std::size_t j = 0; j < c.c.size(); j += p) root.c.push_back(c.c[j]);
            root.trim();
            self(self, root, mult * static_cast<int>(p));
        }
    };
    rec(rec, monic(f_in), 1);
    return out;
}

/// Product of the distinct monic irreducible factors of f.
inline Poly radical(const Poly& f) {
    Poly r{f.p, {1}};
    for (const auto& [g, e] : squarefree_decomposition(f)) r = mul(r, g);
    return monic(r);
}

}  // namespace mfid::modp
