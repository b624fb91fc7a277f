#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "mfid/forms.hpp"
#include "mfid/numeric.hpp"

namespace mfid {

/// E_{12n} = sum_l a_l E_12^{n-l} Delta^l.
struct MonomialExpansion {
    int n = 0;
    std::vector<Rational> a;
};

inline MonomialExpansion expand_E12n(int n, std::size_t prec) {
    if (n < 1) throw std::invalid_argument("expand_E12n: n must be positive");
    if (prec < static_cast<std::size_t>(n) + 2)
        throw std::invalid_argument("expand_E12n: precision must be at least n + 2");
    const auto e12 = eisenstein_level1(12, prec).series;
    const auto d = delta(prec).series;
    RatSeries rest = eisenstein_level1(12 * n, prec).series;
    MonomialExpansion out{n, {}};
    for (int l = 0; l <= n; ++l) {
        const auto mono = e12.pow(static_cast<unsigned>(n - l)) * d.pow(static_cast<unsigned>(l));
        // rest has valuation >= l; rest / Delta^l at i*infinity
        const auto lead = rest.shift_down(static_cast<std::size_t>(l)) *
                          d.pow(static_cast<unsigned>(l)).shift_down(static_cast<std::size_t>(l)).inv();
        out.a.push_back(lead[0]);
        rest = rest - out.a.back() * mono;
    }
    return out;
}

/// First index where E_{12n} and the monomial sum differ below prec.
inline std::optional<std::size_t> expansion_residual(const MonomialExpansion& e, std::size_t prec) {
    const auto e12 = eisenstein_level1(12, prec).series;
    const auto d = delta(prec).series;
    RatSeries r = eisenstein_level1(12 * e.n, prec).series;
    for (int l = 0; l <= e.n; ++l)
        r = r - e.a[static_cast<std::size_t>(l)] * (e12.pow(static_cast<unsigned>(e.n - l)) * d.pow(static_cast<unsigned>(l)));
    return r.valuation();
}

/// P(x) = sum_l a_l x^{n-l}.
inline RatPoly algebraic_poly(const MonomialExpansion& e) {
    std::vector<Rational> c(static_cast<std::size_t>(e.n) + 1);
    for (int l = 0; l <= e.n; ++l) c[static_cast<std::size_t>(e.n - l)] = e.a[static_cast<std::size_t>(l)];
    return RatPoly(std::move(c));
}

/// |a_n| <= m * n^e for n >= 1.
struct CoefficientEnvelope {
    Real m = 1;
    int e = 0;
};

/// Valid for E_k: sigma_{k-1}(n) <= zeta(k-1) n^{k-1} <= 2 n^{k-1} when k >= 4.
inline CoefficientEnvelope eisenstein_envelope(int k) {
    const Rational s = rabs(Rational(2 * k) / bernoulli(static_cast<unsigned>(k)));
    return {2 * to_real(s), k - 1};
}

/// Deligne: |tau(n)| <= d(n) n^{11/2} <= 2 n^6.
inline CoefficientEnvelope delta_envelope() { return {2, 6}; }

/// Envelope fitted to the known coefficients (doubled); a heuristic, not a proof.
inline CoefficientEnvelope estimated_envelope(const RatSeries& f, int k) {
    Real m = 0;
    for (std::size_t n = 1; n < f.prec(); ++n) {
        const Real r = abs(to_real(f[n])) / pow(Real(n), k);
        if (r > m) m = r;
    }
    return {2 * std::max(m, Real(1)), k};
}

/// Bound on sum_{n >= start} m n^e r^n for 0 <= r < 1.
inline Real tail_bound(const CoefficientEnvelope& env, const Real& r, std::size_t start) {
    if (r >= 1) throw std::domain_error("tail_bound: |q| must be < 1");
    Real sum = 0;
    std::size_t n = std::max<std::size_t>(start, 1);
    for (;; ++n) {
        const Real term = env.m * pow(Real(n), env.e) * pow(r, static_cast<long>(n));
        const Real ratio = pow(Real(n + 1) / Real(n), env.e) * r;
        if (ratio <= Real(0.5)) return sum + term / (1 - ratio);
        sum += term;
    }
}

struct SeriesValue {
    Complex value;
    Real tail;
};

inline constexpr double kArcMinImag = 0.85;

inline Complex qparam(const Complex& z) {
    const Complex twopii(0, 2 * pi<Real>());
    return exp(twopii * z);
}

/// sum a_n q^n at z with q = e^{2 pi i z}; the tail past the known coefficients is bounded by env.
inline SeriesValue eval_series_at(const RatSeries& f, const Complex& z, const CoefficientEnvelope& env) {
    if (z.imag() < Real(kArcMinImag))
        throw std::domain_error("eval_series_at: Im z = " + z.imag().str(6) + " < 0.85, tail bound does not apply");
    const Complex q = qparam(z);
    Complex v(0);
    for (std::size_t n = f.prec(); n-- > 0;) v = v * q + Complex(to_real(f[n]));
    return {v, tail_bound(env, abs(q), f.prec())};
}

inline SeriesValue eval_series_at(const RatSeries& f, const Complex& z, int k) {
    return eval_series_at(f, z, estimated_envelope(f, k));
}

/// Terms of E_k needed for a tail below eps on Im z >= sin(pi/3).
inline std::size_t arc_terms(int k, double eps = 1e-40) {
    const auto env = eisenstein_envelope(k);
    const Real r = exp(-2 * pi<Real>() * sqrt(Real(3)) / 2);
    std::size_t n = 8;
    while (tail_bound(env, r, n) > Real(eps)) n += 4;
    return n;
}

struct ArcZero {
    double theta = 0;
    Complex z;
    double residual = 0;
};

struct ArcOptions {
    int samples = 2048;
    double tol = 1e-12;
    std::size_t terms = 0;  // 0: chosen from the Eisenstein envelope
};

namespace detail {

// e^{ik theta/2} E_k(e^{i theta}), real on the arc
struct ArcFunction {
    int k;
    RatSeries ek;
    CoefficientEnvelope env;

    Complex raw(const Real& theta) const {
        const Complex z(cos(theta), sin(theta));
        const Real half = Real(k) * theta / 2;
        return Complex(cos(half), sin(half)) * eval_series_at(ek, z, env).value;
    }
    Real operator()(const Real& theta) const { return raw(theta).real(); }
};

}  // namespace detail

/// Zeros of E_k on pi/3 <= theta <= pi/2: uniform sign-change sampling, then bisection to tol.
inline std::vector<ArcZero> find_arc_zeros(int k, const ArcOptions& opt = {}) {
    if (k < 12 || k % 12 != 0) throw std::invalid_argument("find_arc_zeros: weight must be a positive multiple of 12");
    if (opt.samples < 2) throw std::invalid_argument("find_arc_zeros: need at least 2 samples");
    if (!(opt.tol > 0)) throw std::invalid_argument("find_arc_zeros: tolerance must be positive");
    const std::size_t terms = opt.terms ? opt.terms : arc_terms(k);
    detail::ArcFunction F{k, eisenstein_level1(k, terms).series, eisenstein_envelope(k)};
    const Real lo = pi<Real>() / 3, hi = pi<Real>() / 2;
    const int m = opt.samples;
    std::vector<Real> th(static_cast<std::size_t>(m)), val(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        th[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (m - 1);
        val[static_cast<std::size_t>(i)] = F(th[static_cast<std::size_t>(i)]);
    }
    std::vector<ArcZero> out;
    for (std::size_t i = 0; i + 1 < th.size(); ++i) {
        Real a = th[i], b = th[i + 1], fa = val[i], fb = val[i + 1];
        if (fa == 0) {
            b = a;
        } else if (fb == 0 || (fa > 0) == (fb > 0)) {
            continue;
        }
        // bracket width and |F| both below tol
        for (int it = 0; it < 200 && (b - a > Real(opt.tol) || abs(F((a + b) / 2)) > Real(opt.tol)); ++it) {
            const Real mid = (a + b) / 2;
            const Real fm = F(mid);
            if (fm == 0) {
                a = b = mid;
                break;
            }
            if ((fm > 0) == (fa > 0)) {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
        }
        const Real t = (a + b) / 2;
        ArcZero zr;
        zr.theta = static_cast<double>(t);
        zr.z = Complex(cos(t), sin(t));
        zr.residual = static_cast<double>(abs(F.raw(t)));
        out.push_back(zr);
        if (val[i + 1] == 0) ++i;
    }
    return out;
}

struct ArcPoint {
    double theta = 0;
    Real j;
};

struct JValueReport {
    int n = 0;
    MonomialExpansion expansion;
    RatPoly poly;
    std::optional<std::size_t> expansion_residual;
    std::vector<ArcPoint> zeros;
    std::vector<Complex> roots_shifted;
    bool roots_ok = false;  // |P(r)| <= 1e-10 max|a_l|
    double max_root_residual = 0;
    double max_pair_distance = 0;
    bool verified = false;
    std::string failure;
};

struct JValueOptions {
    double tol_match = 1e-8;
    ArcOptions arc{};
    std::uint64_t seed = 1;
};

inline Rational j_shift() { return Rational(432000, 691); }

namespace detail {

// min over bijections of the max distance; exhaustive for n <= 8, greedy otherwise
inline double optimal_pairing(const std::vector<Complex>& s1, const std::vector<Complex>& s2) {
    const std::size_t n = s1.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto cost = [&](const std::vector<std::size_t>& p) {
        double worst = 0;
        for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, static_cast<double>(abs(s1[i] - s2[p[i]])));
        return worst;
    };
    if (n > 8) {
        std::vector<bool> used(n, false);
        double worst = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t best = n;
            for (std::size_t j = 0; j < n; ++j)
                if (!used[j] && (best == n || abs(s1[i] - s2[j]) < abs(s1[i] - s2[best]))) best = j;
            used[best] = true;
            worst = std::max(worst, static_cast<double>(abs(s1[i] - s2[best])));
        }
        return worst;
    }
    double best = cost(perm);
    while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, cost(perm));
    return best;
}

}  // namespace detail

/// j at the arc zeros of E_{12n} against the roots of P shifted by 432000/691.
inline JValueReport jvalue_algebraicity_check(int n, const JValueOptions& opt = {}) {
    if (n < 1) throw std::invalid_argument("jvalue_algebraicity_check: n must be positive");
    JValueReport rep;
    rep.n = n;
    const std::size_t prec = 4 * static_cast<std::size_t>(n) + 20;
    rep.expansion = expand_E12n(n, prec);
    rep.expansion_residual = expansion_residual(rep.expansion, prec);
    rep.poly = algebraic_poly(rep.expansion);

    Real amax = 0;
    for (const auto& a : rep.expansion.a) amax = std::max(amax, Real(abs(to_real(a))));
    RootOptions ro;
    ro.seed = opt.seed;
    const auto roots = aberth_roots(rep.poly, ro);
    rep.roots_ok = true;
    for (const auto& r : roots) {
        Complex v(0);
        for (std::size_t i = rep.poly.coeffs().size(); i-- > 0;) v = v * r + Complex(to_real(rep.poly.coeffs()[i]));
        const double res = static_cast<double>(abs(v) / amax);
        rep.max_root_residual = std::max(rep.max_root_residual, res);
        if (res > 1e-10) rep.roots_ok = false;
        rep.roots_shifted.push_back(r + Complex(to_real(j_shift())));
    }

    const int k = 12 * n;
    const auto zs = find_arc_zeros(k, opt.arc);
    const std::size_t terms = std::max<std::size_t>(arc_terms(4), arc_terms(12));
    const auto e4 = eisenstein_level1(4, terms).series;
    const auto d = delta(terms).series;
    std::vector<Complex> s1;
    for (const auto& z : zs) {
        const Complex v4 = eval_series_at(e4, z.z, eisenstein_envelope(4)).value;
        const Complex vd = eval_series_at(d, z.z, delta_envelope()).value;
        const Complex j = v4 * v4 * v4 / vd;
        rep.zeros.push_back({z.theta, j.real()});
        s1.push_back(j);
    }

    if (rep.expansion_residual) {
        rep.failure = "expansion residual nonzero at q^" + std::to_string(*rep.expansion_residual);
    } else if (!rep.roots_ok) {
        rep.failure = "root finder residual above 1e-10";
    } else if (s1.size() != rep.roots_shifted.size()) {
        rep.failure = "found " + std::to_string(s1.size()) + " arc zeros, polynomial has degree " + std::to_string(n);
    } else {
        rep.max_pair_distance = detail::optimal_pairing(s1, rep.roots_shifted);
        if (rep.max_pair_distance > opt.tol_match)
            rep.failure = "max pairing distance above tolerance";
        else
            rep.verified = true;
    }
    return rep;
}

}  // namespace mfid
