#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "mfid/exact/ratpoly.hpp"

namespace mfid {

using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;
using RealWide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<250>>;
using ComplexWide = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<boost::multiprecision::cpp_bin_float<250>>>;

template <class R = Real>
R to_real(const Rational& q) {
    return R(num(q)) / R(den(q));
}

template <class R = Real>
R pi() {
    return boost::math::constants::pi<R>();
}

/// |log10 |n|| rounded up, 0 for n = 0.
inline long decimal_digits(const Integer& n) {
    if (n == 0) return 0;
    return static_cast<long>(mpz_sizeinbase(n.backend().data(), 10));
}

struct RootOptions {
    std::uint64_t seed = 1;
    double tol = 1e-30;
    int max_iter = 1000;
};

/// All complex roots of p by Aberth-Ehrlich iteration, started from a randomly rotated
/// circle of radius |a_0/a_n|^{1/n} (seeded, so runs are reproducible).
template <class R = Real, class C = Complex>
std::vector<C> aberth_roots(const RatPoly& p, const RootOptions& opt = {}) {
    const int n = p.degree();
    if (n < 1) throw std::invalid_argument("aberth_roots: degree must be >= 1");
    std::vector<C> a;
    for (const auto& c : p.coeffs()) a.emplace_back(to_real<R>(c));
    auto eval = [&](const C& z, C& dp) {
        C v = a[static_cast<std::size_t>(n)];
        dp = C(0);
        for (int i = n - 1; i >= 0; --i) {
            dp = dp * z + v;
            v = v * z + a[static_cast<std::size_t>(i)];
        }
        return v;
    };
    std::vector<C> z(static_cast<std::size_t>(n));
    R radius = abs(a[0] / a[static_cast<std::size_t>(n)]);
    radius = radius == 0 ? R(1) : R(pow(radius, R(1) / n));
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const R twopi = 2 * pi<R>();
    const R offset = R(unif(rng)) * twopi / n;
    for (int j = 0; j < n; ++j) {
        const R t = twopi * j / n + offset;
        const R r = radius * R(1 + 0.1 * unif(rng));
        z[static_cast<std::size_t>(j)] = C(r * cos(t), r * sin(t));
    }
    if (n == 1) return {C(-a[0] / a[1])};
    const R tol(opt.tol);
    for (int it = 0; it < opt.max_iter; ++it) {
        R worst = 0;
        for (int j = 0; j < n; ++j) {
            auto& zj = z[static_cast<std::size_t>(j)];
            C dp;
            const C v = eval(zj, dp);
            if (v == C(0)) continue;
            const C w = v / dp;
            C s(0);
            for (int k = 0; k < n; ++k)
                if (k != j) s += C(1) / (zj - z[static_cast<std::size_t>(k)]);
            const C step = w / (C(1) - w * s);
            zj -= step;
            const R scale = std::max(R(1), R(abs(zj)));
            worst = std::max(worst, R(abs(step) / scale));
        }
        if (worst < tol) break;
    }
    return z;
}

/// Real roots (imaginary part below tol relative), sorted in decreasing order.
template <class R = Real, class C = Complex>
std::vector<R> real_roots_desc(const RatPoly& p, const RootOptions& opt = {}, double imag_tol = 1e-20) {
    std::vector<R> out;
    for (const auto& z : aberth_roots<R, C>(p, opt))
        if (abs(z.imag()) <= R(imag_tol) * std::max(R(1), R(abs(z)))) out.push_back(z.real());
    std::sort(out.begin(), out.end(), [](const R& x, const R& y) { return x > y; });
    return out;
}

/// x in Q[y]/(m) evaluated at a numeric root of m.
template <class R = Real>
R eval_at(const std::vector<Rational>& coords, const R& root) {
    R v = 0;
    for (std::size_t j = coords.size(); j-- > 0;) v = v * root + to_real<R>(coords[j]);
    return v;
}

}  // namespace mfid
