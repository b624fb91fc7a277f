#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mfid/exact/irreducibility.hpp"
#include "mfid/exact/ratpoly.hpp"

namespace mfid {

class NumberFieldElement;

/// Q[x]/(m(x)) for a monic irreducible m. Cheap to copy (shared immutable data).
class NumberField {
public:
    /// Requires an Irreducible certificate for `modulus`.
    static NumberField create(const RatPoly& modulus, const IrreducibilityCertificate& cert,
                              std::string generator_name = "a") {
        if (!cert.irreducible()) throw std::invalid_argument("NumberField: modulus not certified irreducible");
        return NumberField(modulus, std::move(generator_name));
    }

    /// Certifies irreducibility itself; throws Unsupported if no certificate is found.
    static NumberField from_polynomial(const RatPoly& modulus, std::string generator_name = "a") {
        auto cert = poly_irreducible(modulus);
        if (!cert.irreducible())
            throw Unsupported("NumberField: could not certify irreducibility of " + modulus.str() + " (" +
                              to_string(cert.verdict) + ")");
        return NumberField(modulus, std::move(generator_name));
    }

    /// Q itself, as Q[x]/(x).
    static NumberField rationals() {
        static const NumberField q(RatPoly::x(), "a");
        return q;
    }

    static NumberField cyclotomic(int m);

    int degree() const { return data_->modulus.degree(); }
    const RatPoly& modulus() const { return data_->modulus; }
    const std::string& generator_name() const { return data_->name; }
    bool is_rational() const { return degree() == 1; }
    /// m when this field was built as Q(zeta_m), 0 otherwise.
    int cyclotomic_order() const { return data_->cyclotomic_order; }

    NumberFieldElement zero() const;
    NumberFieldElement one() const;
    NumberFieldElement generator() const;
    NumberFieldElement from_rational(const Rational& a) const;
    NumberFieldElement from_poly(const RatPoly& p) const;
    NumberFieldElement from_coords(std::vector<Rational> coords) const;

    friend bool operator==(const NumberField& a, const NumberField& b) {
        return a.data_ == b.data_ || a.data_->modulus == b.data_->modulus;
    }

    std::string str() const { return "Q[" + data_->name + "]/(" + data_->modulus.str(data_->name.c_str()) + ")"; }

private:
    struct Data {
        RatPoly modulus;
        std::string name;
        int cyclotomic_order = 0;
    };
    NumberField(const RatPoly& modulus, std::string name, int cyclotomic_order = 0) {
        if (!modulus.is_monic() || modulus.degree() < 1)
            throw std::invalid_argument("NumberField: modulus must be monic of degree >= 1");
        data_ = std::make_shared<const Data>(Data{modulus, std::move(name), cyclotomic_order});
    }
    std::shared_ptr<const Data> data_;
};

class NumberFieldElement {
public:
    NumberFieldElement(NumberField parent, std::vector<Rational> coords)
        : parent_(std::move(parent)), c_(std::move(coords)) {
        if (static_cast<int>(c_.size()) != parent_.degree())
            throw std::invalid_argument("NumberFieldElement: coordinate count differs from field degree");
    }

    const NumberField& parent() const { return parent_; }
    const std::vector<Rational>& coords() const { return c_; }
    RatPoly poly() const { return RatPoly(c_); }

    bool is_zero() const {
        for (const auto& a : c_)
            if (a != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    Rational rational_part() const { return c_[0]; }

    friend NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b) {
        a.check_parent(b);
        std::vector<Rational> r(a.c_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.c_[i];
        return {a.parent_, std::move(r)};
    }
    friend NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b) {
        a.check_parent(b);
        std::vector<Rational> r(a.c_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.c_[i];
        return {a.parent_, std::move(r)};
    }
    friend NumberFieldElement operator-(const NumberFieldElement& a) {
        std::vector<Rational> r(a.c_);
        for (auto& v : r) v = -v;
        return {a.parent_, std::move(r)};
    }
    friend NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b) {
        a.check_parent(b);
        const std::size_t d = a.c_.size();
        if (d == 1) return {a.parent_, {a.c_[0] * b.c_[0]}};
        std::vector<Rational> prod(2 * d - 1);
        for (std::size_t i = 0; i < d; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) prod[i + j] += a.c_[i] * b.c_[j];
        }
        // Reduce by the monic modulus from the top.
        const auto& m = a.parent_.modulus().coeffs();
        for (std::size_t k = prod.size(); k-- > d;) {
            const Rational t = prod[k];
            if (t == 0) continue;
            for (std::size_t j = 0; j < d; ++j) prod[k - d + j] -= t * m[j];
        }
        prod.resize(d);
        return {a.parent_, std::move(prod)};
    }
    friend NumberFieldElement operator*(const NumberFieldElement& a, const Rational& s) {
        std::vector<Rational> r(a.c_);
        for (auto& v : r) v *= s;
        return {a.parent_, std::move(r)};
    }
    friend NumberFieldElement operator*(const Rational& s, const NumberFieldElement& a) { return a * s; }

    /// Inverse via the extended Euclidean algorithm on (a(x), m(x)).
    NumberFieldElement inv() const {
        if (is_zero()) throw std::domain_error("NumberFieldElement: inverse of zero");
        if (c_.size() == 1) return {parent_, {1 / c_[0]}};
        XGcd e = xgcd(poly(), parent_.modulus());
        if (e.g.degree() != 0) throw std::domain_error("NumberFieldElement: element is a zero divisor");
        return parent_.from_poly(e.s);
    }
    friend NumberFieldElement operator/(const NumberFieldElement& a, const NumberFieldElement& b) { return a * b.inv(); }

    NumberFieldElement& operator+=(const NumberFieldElement& b) { return *this = *this + b; }
    NumberFieldElement& operator-=(const NumberFieldElement& b) { return *this = *this - b; }
    NumberFieldElement& operator*=(const NumberFieldElement& b) { return *this = *this * b; }

    NumberFieldElement pow(unsigned e) const {
        NumberFieldElement r = parent_.one(), b = *this;
        while (e) {
            if (e & 1u) r *= b;
            b *= b;
            e >>= 1u;
        }
        return r;
    }

    friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) {
        return a.parent_ == b.parent_ && a.c_ == b.c_;
    }

    /// Nontrivial automorphism of a quadratic field: x -> trace - x.
    NumberFieldElement conjugate() const {
        if (parent_.degree() == 1) return *this;
        if (parent_.degree() != 2) throw Unsupported("conjugate: only quadratic fields are supported");
        const Rational tr = -parent_.modulus().coeff(1);
        return {parent_, {c_[0] + c_[1] * tr, -c_[1]}};
    }

    /// Absolute trace Tr_{K/Q}.
    Rational trace() const {
        auto p = power_sums(parent_.modulus(), c_.size());
        Rational t = 0;
        for (std::size_t i = 0; i < c_.size(); ++i) t += c_[i] * p[i];
        return t;
    }

    /// Absolute norm N_{K/Q} = Res(m, a) for monic m.
    Rational norm() const {
        if (c_.size() == 1) return c_[0];
        return resultant(parent_.modulus(), poly());
    }

    std::string str() const { return poly().str(parent_.generator_name().c_str()); }

private:
    void check_parent(const NumberFieldElement& b) const {
        if (!(parent_ == b.parent_)) throw std::invalid_argument("NumberFieldElement: mismatched parent fields");
    }
    NumberField parent_;
    std::vector<Rational> c_;
};

inline NumberFieldElement NumberField::zero() const {
    return {*this, std::vector<Rational>(static_cast<std::size_t>(degree()))};
}
inline NumberFieldElement NumberField::one() const { return from_rational(1); }
inline NumberFieldElement NumberField::generator() const { return from_poly(RatPoly::x()); }
inline NumberFieldElement NumberField::from_rational(const Rational& a) const {
    std::vector<Rational> c(static_cast<std::size_t>(degree()));
    c[0] = a;
    return {*this, std::move(c)};
}
inline NumberFieldElement NumberField::from_poly(const RatPoly& p) const {
    RatPoly r = p % modulus();
    std::vector<Rational> c(static_cast<std::size_t>(degree()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = r.coeff(i);
    return {*this, std::move(c)};
}
inline NumberFieldElement NumberField::from_coords(std::vector<Rational> coords) const {
    return {*this, std::move(coords)};
}

inline NumberFieldElement nf_mul(const NumberFieldElement& a, const NumberFieldElement& b) { return a * b; }
inline NumberFieldElement nf_inv(const NumberFieldElement& a) { return a.inv(); }

/// m-th cyclotomic polynomial.
inline RatPoly cyclotomic_polynomial(int m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    static std::mutex mu;
    static std::map<int, RatPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    RatPoly p = RatPoly::monomial(1, static_cast<std::size_t>(m)) - RatPoly::constant(1);
    for (auto d : divisors(m))
        if (d < m) p = p / cyclotomic_polynomial(static_cast<int>(d));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(m, p);
    return p;
}

inline NumberField NumberField::cyclotomic(int m) {
    static std::mutex mu;
    static std::map<int, NumberField> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
    // Cyclotomic polynomials are irreducible over Q.
    NumberField f(cyclotomic_polynomial(m), "z" + std::to_string(m), m);
    cache.emplace(m, f);
    return f;
}

}  // namespace mfid
