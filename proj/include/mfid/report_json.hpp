#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "mfid/identities.hpp"
#include "mfid/scans.hpp"
#include "mfid/zeros.hpp"

namespace mfid {

using Json = nlohmann::ordered_json;

/// Fixed-format floats so identical runs give identical bytes.
inline std::string fixed(double x, int digits = 15) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits, x);
    return buf;
}

template <class R>
std::string fixed_real(const R& x, int digits = 20) {
    return x.str(digits, std::ios_base::scientific);
}

inline std::string exact(const Rational& q) { return q.str(); }

inline Json exact_coords(const NumberFieldElement& x) {
    Json a = Json::array();
    for (const auto& c : x.coords()) a.push_back(exact(c));
    return a;
}

inline Json field_json(const NumberField& f) {
    return Json{{"degree", f.degree()}, {"modulus", f.modulus().str(f.generator_name().c_str())}};
}

inline Json poly_json(const RatPoly& p) {
    Json c = Json::array();
    for (const auto& x : p.coeffs()) c.push_back(exact(x));
    return Json{{"poly", p.str()}, {"coeffs", c}};
}

inline Json to_json(const IdentityReport& r) {
    Json j{{"name", r.name}, {"status", r.status()}, {"verified", r.verified}, {"prec", r.prec}};
    j["first_failure"] = r.first_failure ? Json(*r.first_failure) : Json(nullptr);
    Json vals = Json::object();
    for (const auto& [k, v] : r.values) vals[k] = v;
    j["values"] = vals;
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["checks"] = checks;
    return j;
}

template <CoefficientField K>
Json series_json(const QSeries<K>& s) {
    Json a = Json::array();
    for (std::size_t n = 0; n < s.prec(); ++n) {
        if constexpr (std::is_same_v<K, Rational>)
            a.push_back(exact(s[n]));
        else
            a.push_back(exact_coords(s[n]));
    }
    return a;
}

inline Json matrix_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(exact(m(i, j)));
        rows.push_back(r);
    }
    return rows;
}

inline Json to_json(const Eigenform& e) {
    Json coords = Json::array();
    for (const auto& c : e.coords) coords.push_back(exact_coords(c));
    return Json{{"weight", e.weight},
                {"hecke_index", e.hecke_index},
                {"field", field_json(e.field)},
                {"charpoly", poly_json(e.charpoly)},
                {"coords", coords},
                {"coefficients", series_json(e.series)}};
}

inline Json to_json(const EigenDecomposition& d) {
    Json c = Json::array();
    for (const auto& x : d.c) c.push_back(exact_coords(x));
    Json j{{"weight", d.weight},
           {"source", d.source},
           {"f_field", field_json(d.f.field)},
           {"g_field", field_json(d.g.field)},
           {"prec", d.prec},
           {"c", c}};
    if (d.f.field.degree() == 1) {
        const auto k2 = d.c_in_k2();
        j["c_in_K2"] = exact_coords(k2);
        if (d.g.field.degree() == 2) {
            const auto disc = poly_discriminant(d.g.field.modulus());
            auto sq = squarefree_kernel(num(disc) * den(disc));
            if (sq.complete) {
                if (auto s = sqrt_in_quadratic(d.g.field, sq.kernel)) j["c_surd"] = surd_string(k2, *s, sq.kernel);
            }
        }
    }
    j["coefficient_det"] = exact(d.coefficient_det);
    j["t2_discriminant"] = exact(d.t2_discriminant);
    j["nonsingular"] = d.nonsingular;
    j["residual_ok"] = d.residual_ok();
    j["zero_count"] = d.zero_count;
    Json z = Json::array();
    for (const auto& b : d.c_is_zero) z.push_back(b ? Json(*b) : Json("unknown"));
    j["c_is_zero"] = z;
    Json num = Json::array();
    for (double x : d.c_numeric) num.push_back(fixed(x));
    j["c_numeric"] = num;
    j["all_nonzero"] = d.all_nonzero();
    return j;
}

inline Json to_json(const JValueReport& r) {
    Json a = Json::array();
    for (const auto& x : r.expansion.a) a.push_back(exact(x));
    Json zs = Json::array();
    for (const auto& z : r.zeros) zs.push_back({{"theta", fixed(z.theta)}, {"j_numeric", fixed_real(z.j)}});
    Json roots = Json::array();
    for (const auto& z : r.roots_shifted) roots.push_back({{"re", fixed_real(z.real())}, {"im", fixed_real(z.imag())}});
    return Json{{"n", r.n},
                {"a_l", a},
                {"poly", r.poly.str()},
                {"expansion_exact", !r.expansion_residual.has_value()},
                {"zeros", zs},
                {"poly_roots_shifted", roots},
                {"root_residual_max", fixed(r.max_root_residual)},
                {"max_pair_distance", fixed(r.max_pair_distance)},
                {"verified", r.verified},
                {"failure", r.failure}};
}

inline Json to_json(const MaedaReport& r) {
    Json pats = Json::array();
    for (const auto& [q, p] : r.patterns) pats.push_back({{"p", q}, {"degrees", p}});
    Json j{{"k", r.k},
           {"dim", r.dim},
           {"hecke_index", r.hecke_index},
           {"charpoly", poly_json(r.charpoly)},
           {"irreducibility", to_string(r.cert.verdict)},
           {"reason", r.cert.reason},
           {"disc", r.disc.str()},
           {"disc_squarefree", r.disc_squarefree.str()}};
    j["quadratic_field_disc"] = r.quadratic_field_disc ? Json(r.quadratic_field_disc->str()) : Json(nullptr);
    j["patterns"] = pats;
    j["sn_evidence"] = r.sn_evidence;
    return j;
}

inline Json to_json(const IntersectionReport& r) {
    Json ps = Json::array();
    for (const auto& p : r.primes)
        ps.push_back({{"p", p.p.str()},
                      {"dedekind_k", to_string(p.side1)},
                      {"dedekind_2k", to_string(p.side2)},
                      {"unramified_k", p.unramified1},
                      {"unramified_2k", p.unramified2},
                      {"verdict", p.verdict}});
    Json j{{"k", r.k}, {"dim_k", r.dim1}, {"dim_2k", r.dim2}};
    if (r.dim1 > 1 && r.dim2 > 1) {
        j["t_k"] = r.t1.str();
        j["t_2k"] = r.t2.str();
        j["disc_k"] = r.disc1.str();
        j["disc_2k"] = r.disc2.str();
        j["gcd"] = r.g.str();
        j["gcd_factorization"] = factorization_string(r.gfac);
        j["quad_field_disc_k"] = r.quad_field_disc1 ? Json(r.quad_field_disc1->str()) : Json(nullptr);
    }
    j["shared_primes"] = ps;
    j["verdict"] = r.verdict;
    return j;
}

inline Json to_json(const FinitenessReport& r) {
    Json rows = Json::array();
    for (const auto& w : r.rows)
        rows.push_back({{"k", w.k},
                        {"envelope", fixed(w.envelope)},
                        {"l_star", w.l_star},
                        {"enumerated_to", w.enumerated_to},
                        {"complete", w.complete}});
    Json surv = Json::array();
    for (const auto& s : r.survivors)
        surv.push_back({{"k", s.k},
                        {"conductor", s.conductor},
                        {"character", s.character},
                        {"alpha", s.alpha},
                        {"beta", s.beta},
                        {"reverified", s.reverified}});
    std::size_t counts[5] = {0, 0, 0, 0, 0};
    const char* names[5] = {"parity", "imprimitive-square", "bound", "exact", "survivor"};
    for (const auto& c : r.cells)
        for (int i = 0; i < 5; ++i)
            if (c.excluded_by == names[i]) ++counts[i];
    Json cc = Json::object();
    for (int i = 0; i < 5; ++i) cc[names[i]] = counts[i];
    return Json{{"a", exact(r.a)},
                {"b", exact(r.b)},
                {"k_bound", r.k_bound},
                {"k_max", r.k_max},
                {"l_max", r.l_max},
                {"monotone_envelope", r.monotone_envelope},
                {"monotone_checked_to", r.monotone_checked_to},
                {"complete", r.complete},
                {"rows", rows},
                {"cell_counts", cc},
                {"survivors", surv}};
}

inline Json to_json(const BoundCheck& b) {
    return Json{{"k", b.k},
                {"conductor", b.conductor},
                {"character", b.character},
                {"lower", fixed_real(b.lower)},
                {"actual", fixed_real(b.actual)},
                {"upper", fixed_real(b.upper)},
                {"holds", b.holds}};
}

/// Indented "key: value" rendering of a report.
inline void render_text(const Json& j, std::string& out, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const auto& v = it.value();
            if (v.is_structured() && !v.empty() && !(v.is_array() && !v.front().is_structured())) {
                out += pad + it.key() + ":\n";
                render_text(v, out, indent + 2);
            } else if (v.is_array()) {
                std::string s;
                for (const auto& e : v) s += (s.empty() ? "" : ", ") + scalar(e);
                out += pad + it.key() + ": [" + s + "]\n";
            } else {
                out += pad + it.key() + ": " + scalar(v) + "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (e.is_structured()) {
                out += pad + "-\n";
                render_text(e, out, indent + 2);
            } else {
                out += pad + "- " + scalar(e) + "\n";
            }
        }
    } else {
        out += pad + scalar(j) + "\n";
    }
}

}  // namespace mfid
