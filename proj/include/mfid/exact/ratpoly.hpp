#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mfid/exact/rational.hpp"

namespace mfid {

/// Univariate polynomial over Q, dense, ascending coefficients, trailing zeros trimmed.
class RatPoly {
public:
    static constexpr int zero_degree = -1;

    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    RatPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static RatPoly constant(const Rational& a) { return RatPoly(std::vector<Rational>{a}); }
    static RatPoly monomial(const Rational& a, std::size_t deg) {
        std::vector<Rational> c(deg + 1);
        c[deg] = a;
        return RatPoly(std::move(c));
    }
    static RatPoly x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    RatPoly monic() const {
        if (is_zero()) throw std::domain_error("monic of zero polynomial");
        return *this * (1 / lead());
    }

    Rational operator()(const Rational& x) const {
        Rational r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    RatPoly derivative() const {
        std::vector<Rational> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
        return RatPoly(std::move(d));
    }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return RatPoly(std::move(r));
    }
    friend RatPoly operator-(const RatPoly& a) {
        std::vector<Rational> r(a.c_);
        for (auto& v : r) v = -v;
        return RatPoly(std::move(r));
    }
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return RatPoly(std::move(r));
    }
    friend RatPoly operator*(const RatPoly& a, const Rational& s) {
        std::vector<Rational> r(a.c_);
        for (auto& v : r) v *= s;
        return RatPoly(std::move(r));
    }
    friend RatPoly operator*(const Rational& s, const RatPoly& a) { return a * s; }
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division: a = q*b + r with deg r < deg b.
    friend std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        if (a.degree() < b.degree()) return {RatPoly(), a};
        std::vector<Rational> r(a.c_);
        std::vector<Rational> q(a.c_.size() - b.c_.size() + 1);
        const Rational inv_lead = 1 / b.lead();
        const std::size_t db = b.c_.size() - 1;
        for (std::size_t i = q.size(); i-- > 0;) {
            Rational t = r[i + db] * inv_lead;
            q[i] = t;
            if (t == 0) continue;
            for (std::size_t j = 0; j <= db; ++j) r[i + j] -= t * b.c_[j];
        }
        r.resize(db);
        return {RatPoly(std::move(q)), RatPoly(std::move(r))};
    }
    friend RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }
    friend RatPoly operator/(const RatPoly& a, const RatPoly& b) { return divmod(a, b).first; }

    /// Substitute x -> x + t.
    RatPoly shift(const Rational& t) const {
        RatPoly r;
        RatPoly lin{t, Rational(1)};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + constant(*it);
        return r;
    }

    std::string str(const char* var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const Rational& a = c_[i];
            if (a == 0) continue;
            Rational m = rabs(a);
            os << (a < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
            if (m != 1 || i == 0) os << m;
            if (i >= 1) os << var;
            if (i >= 2) os << "^" << i;
            first = false;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << p.str(); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Monic gcd (zero when both inputs are zero).
inline RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

struct XGcd {
    RatPoly g, s, t;  // s*a + t*b = g, g monic
};

inline XGcd xgcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b, s0 = RatPoly::constant(1), s1, t0, t1 = RatPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational inv = 1 / r0.lead();
    return {r0 * inv, s0 * inv, t0 * inv};
}

/// Resultant over Q by the Euclidean remainder sequence.
inline Rational resultant(RatPoly a, RatPoly b) {
    if (a.is_zero() || b.is_zero()) return 0;
    Rational acc = 1;
    while (true) {
        const int da = a.degree(), db = b.degree();
        if (db == 0) return acc * rpow(b.lead(), da);
        RatPoly r = a % b;
        if (r.is_zero()) return 0;
        if ((da % 2) && (db % 2)) acc = -acc;
        acc *= rpow(b.lead(), da - r.degree());
        a = std::move(b);
        b = std::move(r);
    }
}

/// disc(p) = (-1)^{d(d-1)/2} Res(p, p') / lead(p).
inline Rational poly_discriminant(const RatPoly& p) {
    const int d = p.degree();
    if (d < 1) throw std::invalid_argument("poly_discriminant: degree must be >= 1");
    if (d == 1) return 1;
    Rational r = resultant(p, p.derivative()) / p.lead();
    return ((d * (d - 1) / 2) % 2) ? Rational(-r) : r;
}

/// Primitive integer polynomial proportional to p (positive leading coefficient).
inline std::vector<Integer> primitive_integer_coeffs(const RatPoly& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) l = boost::multiprecision::lcm(l, den(c));
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        out.push_back(num(c) * (l / den(c)));
        g = boost::multiprecision::gcd(g, out.back());
    }
    if (g == 0) return out;
    if (!out.empty() && out.back() < 0) g = -g;
    for (auto& c : out) c /= g;
    return out;
}

inline bool has_integer_coeffs(const RatPoly& p) {
    return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Rational& c) { return den(c) == 1; });
}

/// Power sums p_j = sum of r^j over the roots of monic f, j = 0..count-1 (Newton's identities).
inline std::vector<Rational> power_sums(const RatPoly& f, std::size_t count) {
    const int n = f.degree();
    if (n < 1 || !f.is_monic()) throw std::invalid_argument("power_sums: need monic polynomial of degree >= 1");
    // e_i with f = x^n - e1 x^{n-1} + e2 x^{n-2} - ...
    auto e = [&](int i) -> Rational {
        if (i > n) return 0;
        Rational c = f.coeff(static_cast<std::size_t>(n - i));
        return (i % 2) ? Rational(-c) : c;
    };
    std::vector<Rational> p(count);
    if (count) p[0] = n;
    for (std::size_t j = 1; j < count; ++j) {
        Rational s = 0;
        const int jj = static_cast<int>(j);
        for (int i = 1; i < jj && i <= n; ++i) s += ((i - 1) % 2 ? Rational(-e(i)) : e(i)) * p[j - i];
        if (jj <= n) s += ((jj - 1) % 2 ? Rational(-e(jj)) : e(jj)) * jj;
        p[j] = s;
    }
    return p;
}

}  // namespace mfid
