#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mfid/field.hpp"

namespace mfid {

/// Truncated q-expansion a_0 + a_1 q + ... + a_{prec-1} q^{prec-1} + O(q^prec).
///
/// Precision travels with the value: every binary operation returns a series whose
/// precision is the minimum of its operands', and nothing is ever extrapolated.
template <CoefficientField K>
class QSeries {
public:
    using value_type = K;

    explicit QSeries(std::vector<K> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("QSeries: precision must be positive");
    }

    static QSeries constant(const K& a, std::size_t prec) {
        std::vector<K> c(prec, field_traits<K>::zero_like(a));
        if (prec == 0) throw std::invalid_argument("QSeries: precision must be positive");
        c[0] = a;
        return QSeries(std::move(c));
    }
    static QSeries zero(const K& like, std::size_t prec) {
        return constant(field_traits<K>::zero_like(like), prec);
    }
    static QSeries one(const K& like, std::size_t prec) { return constant(field_traits<K>::one_like(like), prec); }

    std::size_t prec() const { return c_.size(); }
    const std::vector<K>& coeffs() const { return c_; }
    const K& operator[](std::size_t n) const {
        if (n >= c_.size()) throw std::out_of_range("QSeries: coefficient index beyond precision");
        return c_[n];
    }
    K zero_coeff() const { return field_traits<K>::zero_like(c_[0]); }

    QSeries truncate(std::size_t p) const {
        if (p == 0 || p > prec()) throw std::invalid_argument("QSeries::truncate: precision out of range");
        return QSeries(std::vector<K>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(p)));
    }

    friend QSeries operator+(const QSeries& f, const QSeries& g) {
        const std::size_t p = std::min(f.prec(), g.prec());
        std::vector<K> r;
        r.reserve(p);
        for (std::size_t i = 0; i < p; ++i) r.push_back(f.c_[i] + g.c_[i]);
        return QSeries(std::move(r));
    }
    friend QSeries operator-(const QSeries& f, const QSeries& g) {
        const std::size_t p = std::min(f.prec(), g.prec());
        std::vector<K> r;
        r.reserve(p);
        for (std::size_t i = 0; i < p; ++i) r.push_back(f.c_[i] - g.c_[i]);
        return QSeries(std::move(r));
    }
    friend QSeries operator-(const QSeries& f) {
        std::vector<K> r;
        for (const auto& a : f.c_) r.push_back(-a);
        return QSeries(std::move(r));
    }
    friend QSeries operator*(const K& s, const QSeries& f) {
        std::vector<K> r;
        for (const auto& a : f.c_) r.push_back(s * a);
        return QSeries(std::move(r));
    }

    /// Cauchy product truncated at the smaller precision.
    friend QSeries operator*(const QSeries& f, const QSeries& g) {
        const std::size_t p = std::min(f.prec(), g.prec());
        std::vector<K> r(p, f.zero_coeff());
        for (std::size_t i = 0; i < p; ++i) {
            if (field_traits<K>::is_zero(f.c_[i])) continue;
            for (std::size_t j = 0; i + j < p; ++j) {
                if (field_traits<K>::is_zero(g.c_[j])) continue;
                r[i + j] = r[i + j] + f.c_[i] * g.c_[j];
            }
        }
        return QSeries(std::move(r));
    }

    friend bool operator==(const QSeries& f, const QSeries& g) { return f.c_ == g.c_; }

    /// Multiplicative inverse; requires a unit constant term.
    QSeries inv() const {
        if (field_traits<K>::is_zero(c_[0])) throw std::domain_error("QSeries::inv: not a unit (zero constant term)");
        const K a0inv = field_traits<K>::inv(c_[0]);
        std::vector<K> b(prec(), zero_coeff());
        b[0] = a0inv;
        for (std::size_t n = 1; n < prec(); ++n) {
            K s = zero_coeff();
            for (std::size_t i = 1; i <= n; ++i) {
                if (field_traits<K>::is_zero(c_[i])) continue;
                s = s + c_[i] * b[n - i];
            }
            b[n] = -(s * a0inv);
        }
        return QSeries(std::move(b));
    }

    QSeries pow(unsigned e) const {
        QSeries r = one(c_[0], prec());
        QSeries b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            e >>= 1u;
            if (e) b = b * b;
        }
        return r;
    }

    /// Index of the first nonzero coefficient; nullopt when zero to the known precision.
    std::optional<std::size_t> valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!field_traits<K>::is_zero(c_[i])) return i;
        return std::nullopt;
    }

    bool is_zero() const { return !valuation().has_value(); }

    /// Divide by q^v; the first v coefficients must vanish. Precision drops by v.
    QSeries shift_down(std::size_t v) const {
        if (v >= prec()) throw std::invalid_argument("QSeries::shift_down: shift exceeds precision");
        for (std::size_t i = 0; i < v; ++i)
            if (!field_traits<K>::is_zero(c_[i])) throw std::domain_error("QSeries::shift_down: nonzero coefficient below shift");
        return QSeries(std::vector<K>(c_.begin() + static_cast<std::ptrdiff_t>(v), c_.end()));
    }

    /// Multiply by q^v. Precision grows by v.
    QSeries shift_up(std::size_t v) const {
        std::vector<K> r(v, zero_coeff());
        r.insert(r.end(), c_.begin(), c_.end());
        return QSeries(std::move(r));
    }

    /// q -> q^t. Precision becomes t * prec.
    QSeries dilate(std::size_t t) const {
        if (t == 0) throw std::invalid_argument("QSeries::dilate: factor must be positive");
        std::vector<K> r(prec() * t, zero_coeff());
        for (std::size_t i = 0; i < prec(); ++i) r[i * t] = c_[i];
        return QSeries(std::move(r));
    }

    /// Index of the first coefficient where the two series differ (within the common precision).
    friend std::optional<std::size_t> first_difference(const QSeries& f, const QSeries& g) {
        const std::size_t p = std::min(f.prec(), g.prec());
        for (std::size_t i = 0; i < p; ++i)
            if (!(f.c_[i] == g.c_[i])) return i;
        return std::nullopt;
    }

    template <class F>
    auto map(F&& fn) const {
        using R = std::decay_t<decltype(fn(c_[0]))>;
        std::vector<R> r;
        r.reserve(c_.size());
        for (const auto& a : c_) r.push_back(fn(a));
        return QSeries<R>(std::move(r));
    }

private:
    std::vector<K> c_;
};

template <CoefficientField K>
QSeries<K> qs_mul(const QSeries<K>& f, const QSeries<K>& g) {
    return f * g;
}
template <CoefficientField K>
QSeries<K> qs_inv(const QSeries<K>& f) {
    return f.inv();
}
template <CoefficientField K>
QSeries<K> qs_pow(const QSeries<K>& f, unsigned e) {
    return f.pow(e);
}
template <CoefficientField K>
std::optional<std::size_t> qs_valuation(const QSeries<K>& f) {
    return f.valuation();
}

using RatSeries = QSeries<Rational>;
using NFSeries = QSeries<NumberFieldElement>;

inline RatSeries rat_series(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return RatSeries(std::move(c));
}

/// Embed a rational series into a number field.
inline NFSeries embed(const RatSeries& f, const NumberField& field) {
    return f.map([&](const Rational& a) { return field.from_rational(a); });
}

}  // namespace mfid
