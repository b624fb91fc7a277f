#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "mfid/exact/integer.hpp"
#include "mfid/exact/number_field.hpp"
#include "mfid/exact/ratpoly.hpp"
#include "mfid/numeric.hpp"

namespace mfid {

/// (Z/NZ)^x as a product of cyclic groups with explicit generators, plus a
/// discrete-log table for every unit.
class UnitGroup {
public:
    explicit UnitGroup(std::int64_t modulus) : n_(modulus) {
        if (modulus < 1) throw std::invalid_argument("UnitGroup: modulus must be positive");
        if (modulus > 1'000'000) throw std::invalid_argument("UnitGroup: modulus too large");
        std::int64_t rest = modulus;
        for (std::int64_t p = 2; rest > 1; ++p) {
            if (p * p > rest) p = rest;
            if (rest % p) continue;
            std::int64_t pa = 1;
            int a = 0;
            while (rest % p == 0) {
                rest /= p;
                pa *= p;
                ++a;
            }
            add_prime_power(p, a, pa);
        }
        exponent_ = 1;
        for (auto o : orders_) exponent_ = lcm_i64(exponent_, o);
        build_dlog();
    }

    std::int64_t modulus() const { return n_; }
    const std::vector<std::int64_t>& generators() const { return gens_; }
    const std::vector<std::int64_t>& orders() const { return orders_; }
    std::int64_t exponent() const { return exponent_; }
    std::int64_t order() const {
        std::int64_t r = 1;
        for (auto o : orders_) r *= o;
        return r;
    }
    bool is_unit(std::int64_t a) const { return unit_[static_cast<std::size_t>(mod(a))]; }
    /// Exponent vector of a unit with respect to the generators.
    const std::vector<int>& dlog(std::int64_t a) const {
        const auto i = static_cast<std::size_t>(mod(a));
        if (!unit_[i]) throw std::invalid_argument("UnitGroup::dlog: not a unit");
        return dlog_[i];
    }

    std::int64_t mod(std::int64_t a) const {
        std::int64_t r = a % n_;
        return r < 0 ? r + n_ : r;
    }

private:
    void add_prime_power(std::int64_t p, int a, std::int64_t pa) {
        const std::int64_t other = n_ / pa;
        auto lift = [&](std::int64_t g) {
            // x = g mod p^a, x = 1 mod other
            if (other == 1) return g % pa;
            for (std::int64_t x = g % pa; x < n_; x += pa)
                if (x % other == 1 % other) return x;
            throw std::logic_error("UnitGroup: CRT lift failed");
        };
        if (p == 2) {
            if (a == 1) return;
            gens_.push_back(lift(pa - 1));
            orders_.push_back(2);
            if (a >= 3) {
                gens_.push_back(lift(5));
                orders_.push_back(pa / 4);
            }
            return;
        }
        const std::int64_t phi = pa / p * (p - 1);
        std::int64_t g = 2;
        for (;; ++g) {
            if (g % p == 0) continue;
            bool primitive = true;
            for (auto q : divisors(p - 1)) {
                if (q == p - 1) continue;
                if (powmod(static_cast<std::uint64_t>(g), static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(p)) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (!primitive) continue;
            if (a >= 2 && powmod(static_cast<std::uint64_t>(g), static_cast<std::uint64_t>(p - 1),
                                 static_cast<std::uint64_t>(p * p)) == 1)
                continue;
            break;
        }
        gens_.push_back(lift(g));
        orders_.push_back(phi);
    }

    void build_dlog() {
        dlog_.assign(static_cast<std::size_t>(n_), {});
        unit_.assign(static_cast<std::size_t>(n_), false);
        std::vector<int> e(gens_.size(), 0);
        // mixed-radix walk over all generator exponent vectors
        while (true) {
            std::uint64_t x = 1 % static_cast<std::uint64_t>(n_);
            for (std::size_t i = 0; i < gens_.size(); ++i)
                x = mulmod(x,
                           powmod(static_cast<std::uint64_t>(gens_[i]), static_cast<std::uint64_t>(e[i]),
                                  static_cast<std::uint64_t>(n_)),
                           static_cast<std::uint64_t>(n_));
            dlog_[x] = e;
            unit_[x] = true;
            std::size_t i = 0;
            while (i < e.size() && ++e[i] == orders_[i]) e[i++] = 0;
            if (i == e.size()) break;
        }
    }

    std::int64_t n_;
    std::vector<std::int64_t> gens_, orders_;
    std::int64_t exponent_ = 1;
    std::vector<std::vector<int>> dlog_;
    std::vector<bool> unit_;
};

/// Dirichlet character modulo N, stored by the exponents of its values on the
/// unit-group generators: chi(g_i) = exp(2 pi i e_i / ord_i).
class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<int> exponents)
        : g_(std::move(group)), e_(std::move(exponents)) {
        if (e_.size() != g_->orders().size()) throw std::invalid_argument("DirichletCharacter: exponent count mismatch");
        order_ = 1;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            const auto o = g_->orders()[i];
            e_[i] = static_cast<int>(((e_[i] % o) + o) % o);
            order_ = lcm_i64(order_, o / gcd_i64(e_[i], o));
        }
        build_table();
        conductor_ = compute_conductor();
    }

    static DirichletCharacter trivial(std::int64_t n) {
        auto g = std::make_shared<const UnitGroup>(n);
        return DirichletCharacter(g, std::vector<int>(g->orders().size(), 0));
    }

    std::int64_t modulus() const { return g_->modulus(); }
    const UnitGroup& group() const { return *g_; }
    std::shared_ptr<const UnitGroup> group_ptr() const { return g_; }
    const std::vector<int>& exponents() const { return e_; }
    /// Order m of the character; values live in Q(zeta_m).
    std::int64_t order() const { return order_; }
    std::int64_t conductor() const { return conductor_; }
    bool is_primitive() const { return conductor_ == modulus(); }
    bool is_trivial() const { return order_ == 1; }
    /// chi(-1) = +1 or -1.
    int parity() const { return value_exponent(-1) == 0 ? 1 : -1; }

    /// chi(a) = zeta_m^k; returns k in [0, m), or -1 when gcd(a, N) > 1.
    int value_exponent(std::int64_t a) const { return table_[static_cast<std::size_t>(g_->mod(a))]; }

    /// chi(a) as an element of Q(zeta_L); requires order() | L.
    NumberFieldElement value_in(const NumberField& cyclo, std::int64_t a) const {
        const int L = cyclo.cyclotomic_order();
        if (L <= 0 || L % order_ != 0) throw std::invalid_argument("DirichletCharacter: target field does not contain the values");
        const int k = value_exponent(a);
        if (k < 0) return cyclo.zero();
        return cyclo.from_poly(RatPoly::monomial(1, static_cast<std::size_t>(k * (L / order_))));
    }
    NumberFieldElement value(std::int64_t a) const { return value_in(NumberField::cyclotomic(static_cast<int>(order_)), a); }

    /// Rational value, available when the order is 1 or 2.
    Rational rational_value(std::int64_t a) const {
        const int k = value_exponent(a);
        if (k < 0) return 0;
        if (order_ > 2) throw std::domain_error("DirichletCharacter: value is not rational");
        return k == 0 ? 1 : -1;
    }

    DirichletCharacter pow(int k) const {
        std::vector<int> e(e_);
        for (auto& v : e) v *= k;
        return DirichletCharacter(g_, e);
    }
    friend DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b) {
        if (a.modulus() != b.modulus()) throw std::invalid_argument("DirichletCharacter: product needs equal moduli");
        std::vector<int> e(a.e_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.e_[i];
        return DirichletCharacter(a.g_, e);
    }
    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.modulus() == b.modulus() && a.e_ == b.e_;
    }

    std::string label() const {
        std::string s = std::to_string(modulus()) + ":[";
        for (std::size_t i = 0; i < e_.size(); ++i) s += (i ? "," : "") + std::to_string(e_[i]);
        return s + "]";
    }

private:
    void build_table() {
        const auto n = g_->modulus();
        table_.assign(static_cast<std::size_t>(n), -1);
        const auto ex = g_->exponent();
        for (std::int64_t a = 0; a < n; ++a) {
            if (gcd_i64(a, n) != 1) continue;
            const auto& v = g_->dlog(a);
            std::int64_t k = 0;
            for (std::size_t i = 0; i < v.size(); ++i) k += static_cast<std::int64_t>(e_[i]) * v[i] * (ex / g_->orders()[i]);
            k %= ex;
            // k is a multiple of ex / order.
            table_[static_cast<std::size_t>(a)] = static_cast<int>(k / (ex / order_));
        }
    }

    std::int64_t compute_conductor() const {
        const auto n = modulus();
        for (auto d : divisors(n)) {
            bool trivial_on_kernel = true;
            for (std::int64_t u = 1; u < n && trivial_on_kernel; u += d)
                if (gcd_i64(u, n) == 1 && value_exponent(u) != 0) trivial_on_kernel = false;
            if (trivial_on_kernel) return d;
        }
        return n;
    }

    std::shared_ptr<const UnitGroup> g_;
    std::vector<int> e_;
    std::int64_t order_ = 1;
    std::int64_t conductor_ = 1;
    std::vector<int> table_;
};

/// All phi(N) characters modulo N in lexicographic exponent order; index 0 is trivial.
inline std::vector<DirichletCharacter> characters_mod(std::int64_t n) {
    auto g = std::make_shared<const UnitGroup>(n);
    std::vector<DirichletCharacter> out;
    std::vector<int> e(g->orders().size(), 0);
    while (true) {
        out.emplace_back(g, e);
        std::size_t i = e.size();
        // increment the last coordinate fastest
        while (i > 0) {
            --i;
            if (++e[i] < g->orders()[i]) break;
            e[i] = 0;
            if (i == 0) return out;
        }
        if (e.empty()) return out;
    }
}

/// The character a -> chi1(a) chi2(a) modulo n, where both moduli divide n.
inline DirichletCharacter lift_product(const DirichletCharacter& chi1, const DirichletCharacter& chi2, std::int64_t n) {
    if (n % chi1.modulus() || n % chi2.modulus()) throw std::invalid_argument("lift_product: moduli must divide n");
    auto g = std::make_shared<const UnitGroup>(n);
    const std::int64_t L = lcm_i64(chi1.order(), chi2.order());
    std::vector<int> e;
    for (std::size_t i = 0; i < g->generators().size(); ++i) {
        const auto x = g->generators()[i], o = g->orders()[i];
        const std::int64_t s =
            (chi1.value_exponent(x) * (L / chi1.order()) + chi2.value_exponent(x) * (L / chi2.order())) % L;
        if ((s * o) % L) throw std::logic_error("lift_product: value order does not divide generator order");
        e.push_back(static_cast<int>(s * o / L));
    }
    return DirichletCharacter(g, e);
}

inline DirichletCharacter lift(const DirichletCharacter& chi, std::int64_t n) {
    return lift_product(chi, DirichletCharacter::trivial(1), n);
}

inline std::int64_t conductor(const DirichletCharacter& chi) { return chi.conductor(); }
inline bool is_primitive(const DirichletCharacter& chi) { return chi.is_primitive(); }

/// Primitive characters of exact conductor l.
inline std::vector<DirichletCharacter> primitive_characters(std::int64_t l) {
    std::vector<DirichletCharacter> out;
    for (auto& c : characters_mod(l))
        if (c.is_primitive()) out.push_back(c);
    return out;
}

/// The primitive character of conductor f(chi) whose lift is chi.
inline DirichletCharacter inducing_primitive(const DirichletCharacter& chi) {
    const auto f = chi.conductor();
    for (auto& c : primitive_characters(f))
        if (lift(c, chi.modulus()) == chi) return c;
    throw std::logic_error("inducing_primitive: no primitive character of conductor " + std::to_string(f));
}

// ---------------------------------------------------------------------------
// Bernoulli numbers

/// B_k from sum_{j=0}^{k} C(k+1, j) B_j = 0, B_0 = 1 (so B_1 = -1/2).
inline Rational bernoulli(unsigned k) {
    static std::mutex mu;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= k) {
        const unsigned m = static_cast<unsigned>(table.size());
        // C(m+1, j) for j = 0..m
        Rational s = 0;
        Integer binom = 1;
        for (unsigned j = 0; j < m; ++j) {
            s += Rational(binom) * table[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        table.push_back(-s / Rational(Integer(m + 1)));
    }
    return table[k];
}

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Bernoulli polynomial B_k(x) = sum_j C(k, j) B_j x^{k-j}.
inline RatPoly bernoulli_polynomial(unsigned k) {
    std::vector<Rational> c(k + 1);
    for (unsigned j = 0; j <= k; ++j) c[k - j] = Rational(binomial(k, j)) * bernoulli(j);
    return RatPoly(std::move(c));
}

/// Generalized Bernoulli number B_{k,chi} = N^{k-1} sum_{a=0}^{N-1} chi(a) B_k(a/N), in Q(zeta_m).
inline NumberFieldElement gen_bernoulli(unsigned k, const DirichletCharacter& chi) {
    if (k < 1) throw std::invalid_argument("gen_bernoulli: k must be >= 1");
    const NumberField field = NumberField::cyclotomic(static_cast<int>(chi.order()));
    const auto n = chi.modulus();
    const RatPoly bk = bernoulli_polynomial(k);
    NumberFieldElement s = field.zero();
    for (std::int64_t a = 0; a < n; ++a) {
        const int e = chi.value_exponent(a);
        if (e < 0) continue;
        s += chi.value_in(field, a) * bk(Rational(a, n));
    }
    return s * Rational(ipow(Integer(n), k - 1));
}

/// sigma_{k-1}^{psi,phi}(n) = sum_{m | n} psi(n/m) phi(m) m^{k-1}, in Q(zeta_L), L = lcm of the orders.
inline NumberFieldElement sigma_gen(unsigned kminus1, const DirichletCharacter& psi, const DirichletCharacter& phi,
                                    std::int64_t n) {
    if (n < 1) throw std::invalid_argument("sigma_gen: n must be positive");
    const NumberField field = NumberField::cyclotomic(static_cast<int>(lcm_i64(psi.order(), phi.order())));
    NumberFieldElement s = field.zero();
    for (auto m : divisors(n)) {
        if (psi.value_exponent(n / m) < 0 || phi.value_exponent(m) < 0) continue;
        s += psi.value_in(field, n / m) * phi.value_in(field, m) * Rational(ipow(Integer(m), kminus1));
    }
    return s;
}

/// Classical sigma_k(n) as an integer.
inline Integer sigma(unsigned k, std::int64_t n) {
    Integer s = 0;
    for (auto d : divisors(n)) s += ipow(Integer(d), k);
    return s;
}

namespace detail {
template <class R, class C>
double abs_embed_impl(const NumberFieldElement& x, int m) {
    const R angle = 2 * pi<R>() / m;
    C z(0);
    const auto& c = x.coords();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        const R t = angle * static_cast<long>(j);
        z += C(cos(t), sin(t)) * to_real<R>(c[j]);
    }
    return static_cast<double>(abs(z));
}
}  // namespace detail

/// |x| under zeta_m -> exp(2 pi i / m). Rational fields embed trivially.
inline double abs_embed(const NumberFieldElement& x) {
    const auto& f = x.parent();
    if (f.degree() == 1) return static_cast<double>(to_real(rabs(x.coords()[0])));
    const int m = f.cyclotomic_order();
    if (m <= 0) throw std::invalid_argument("abs_embed: element is not in a cyclotomic field");
    long digits = 0;
    for (const auto& c : x.coords()) digits = std::max(digits, decimal_digits(num(c)) - decimal_digits(den(c)));
    if (digits <= 15) return detail::abs_embed_impl<Real, Complex>(x, m);
    if (digits > 200) throw std::domain_error("abs_embed: coordinates exceed 10^200");
    return detail::abs_embed_impl<RealWide, ComplexWide>(x, m);
}

}  // namespace mfid
