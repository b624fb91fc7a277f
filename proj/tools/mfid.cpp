#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mfid/report_json.hpp"

using namespace mfid;

namespace {

struct Config {
    std::string output = "text";
    std::string out;
    std::size_t prec = 0;
    double tol_zero = 1e-12;
    double tol_match = 1e-8;
    std::uint64_t seed = 1;
};

// exit 2
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Result {
    Json json;
    std::string csv;  // empty: no CSV rendering
    bool ok = true;
};

std::size_t default_prec(const Config& c, std::size_t fallback) {
    if (c.prec) return c.prec;
    if (const char* env = std::getenv("MFID_PREC")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw UsageError("MFID_PREC must be a positive integer");
    }
    return fallback;
}

int parse_int(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("invalid ") + what + ": " + s);
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

// "N.i": character number i of characters_mod(N)
DirichletCharacter parse_character(const std::string& s) {
    const auto parts = split(s, '.');
    if (parts.size() != 2) throw UsageError("character must be written modulus.index: " + s);
    const int n = parse_int(parts[0], "modulus");
    const int i = parse_int(parts[1], "character index");
    if (n < 1) throw UsageError("modulus must be positive");
    auto chars = characters_mod(n);
    if (i < 0 || static_cast<std::size_t>(i) >= chars.size()) throw UsageError("character index out of range: " + s);
    return chars[static_cast<std::size_t>(i)];
}

template <CoefficientField K>
std::string series_csv(const QSeries<K>& s) {
    std::string out = "n,coefficient\n";
    for (std::size_t n = 0; n < s.prec(); ++n) {
        if constexpr (std::is_same_v<K, Rational>)
            out += std::to_string(n) + "," + exact(s[n]) + "\n";
        else
            out += std::to_string(n) + ",\"" + s[n].str() + "\"\n";
    }
    return out;
}

Result cmd_qexp(const Config& c, const std::string& form) {
    const std::size_t prec = default_prec(c, 20);
    Result r;
    if (form.rfind("EisNk:", 0) == 0) {
        const auto p = split(form.substr(6), ',');
        if (p.size() != 4) throw UsageError("EisNk expects psi,phi,t,k");
        auto f = eisenstein_levelN(parse_character(p[0]), parse_character(p[1]), parse_int(p[2], "t"),
                                   parse_int(p[3], "weight"), prec);
        r.json = Json{{"form", f.label},
                      {"weight", f.weight},
                      {"level", f.level},
                      {"character", f.character.label()},
                      {"field", field_json(f.series[0].parent())},
                      {"prec", prec},
                      {"coefficients", series_json(f.series)}};
        r.csv = series_csv(f.series);
        return r;
    }
    std::string label = form;
    int weight = 0;
    auto make = [&]() -> RatSeries {
        if (form == "Delta") {
            weight = 12;
            return delta(prec).series;
        }
        if (form == "j") {
            // j = q^{-1} + ...; coefficient list starts at q^{-1}
            label = "j (from q^-1)";
            return jfunction(prec);
        }
        if (form.rfind("Ek:", 0) == 0) {
            weight = parse_int(form.substr(3), "weight");
            label = "E" + std::to_string(weight);
            return eisenstein_level1(weight, prec).series;
        }
        if (form.size() > 1 && form[0] == 'E') {
            weight = parse_int(form.substr(1), "weight");
            return eisenstein_level1(weight, prec).series;
        }
        throw UsageError("unknown form: " + form);
    };
    const RatSeries s = make();
    r.json = Json{{"form", label}, {"weight", weight}, {"prec", prec}, {"coefficients", series_json(s)}};
    r.csv = series_csv(s);
    return r;
}

Result cmd_basis(const Config& c, int k, bool cusp) {
    const std::size_t prec = default_prec(c, static_cast<std::size_t>(10 * dim_Mk(k) + 10));
    auto b = miller_basis(k, prec, cusp);
    Json forms = Json::array();
    for (const auto& f : b.forms) forms.push_back({{"label", f.label}, {"coefficients", series_json(f.series)}});
    Result r;
    r.json = Json{{"weight", k}, {"cusp", cusp}, {"dim", b.size()}, {"prec", prec}, {"forms", forms}};
    std::string csv = "n";
    for (const auto& f : b.forms) csv += "," + f.label;
    csv += "\n";
    for (std::size_t n = 0; n < prec; ++n) {
        csv += std::to_string(n);
        for (std::size_t i = 0; i < b.size(); ++i) csv += "," + exact(b[i][n]);
        csv += "\n";
    }
    r.csv = csv;
    return r;
}

Result cmd_hecke(const Config& c, int n, int k) {
    auto m = hecke_matrix(n, k, c.prec);
    Result r;
    r.json = Json{{"n", n}, {"weight", k}, {"matrix", matrix_json(m.entries)}, {"charpoly", poly_json(charpoly(m))}};
    std::string csv;
    for (std::size_t i = 0; i < m.entries.rows(); ++i) {
        for (std::size_t j = 0; j < m.entries.cols(); ++j) csv += (j ? "," : "") + exact(m.entries(i, j));
        csv += "\n";
    }
    r.csv = csv;
    return r;
}

Result cmd_eigen(const Config& c, int k) {
    auto e = eigenbasis(k, default_prec(c, static_cast<std::size_t>(10 * dim_Mk(k) + 10)));
    Result r;
    r.json = to_json(e);
    return r;
}

Result cmd_decompose(const Config& c, int k) {
    const std::size_t prec = default_prec(c, static_cast<std::size_t>(10 * dim_Mk(2 * k) + 10));
    auto f = eigenbasis(k, prec);
    auto d = decompose_square(f, prec);
    Result r;
    r.json = to_json(d);
    r.ok = d.residual_ok() && d.nonsingular && d.all_nonzero();
    return r;
}

Result cmd_verify(const Config& c, const std::string& what) {
    std::vector<IdentityReport> reps;
    auto want = [&](const char* n) { return what == n || what == "all"; };
    if (!(what == "all" || what == "ramanujan" || what == "e24" || what == "e32" || what == "table1"))
        throw UsageError("verify expects ramanujan, e24, e32, table1 or all");
    if (want("ramanujan")) reps.push_back(verify_ramanujan(default_prec(c, 200)));
    if (want("e24")) reps.push_back(verify_e24(default_prec(c, 40)));
    if (want("e32")) reps.push_back(verify_e32(default_prec(c, 40)));
    if (want("table1")) reps.push_back(verify_table1(default_prec(c, 30)));
    Result r;
    Json arr = Json::array();
    std::string csv = "name,status\n";
    for (const auto& rep : reps) {
        arr.push_back(to_json(rep));
        csv += rep.name + "," + rep.status() + "\n";
        r.ok = r.ok && rep.verified;
    }
    r.json = Json{{"reports", arr}, {"all_verified", r.ok}};
    r.csv = csv;
    return r;
}

Result cmd_zeros(const Config& c, int n) {
    JValueOptions o;
    o.tol_match = c.tol_match;
    o.arc.tol = c.tol_zero;
    o.seed = c.seed;
    auto rep = jvalue_algebraicity_check(n, o);
    Result r;
    r.json = to_json(rep);
    r.json["j_shift"] = exact(j_shift());
    r.ok = rep.verified;
    std::string csv = "theta,j_numeric\n";
    for (const auto& z : rep.zeros) csv += fixed(z.theta) + "," + fixed_real(z.j) + "\n";
    r.csv = csv;
    return r;
}

Result cmd_maeda(const std::vector<int>& ks) {
    std::vector<std::future<std::pair<MaedaReport, IntersectionReport>>> jobs;
    for (int k : ks)
        jobs.push_back(std::async(std::launch::async, [k] {
            return std::make_pair(maeda_check(k), hecke_field_intersection_check(k));
        }));
    Result r;
    Json arr = Json::array();
    std::string csv = "k,dim,irreducibility,disc_squarefree,sn_evidence,intersection\n";
    for (auto& j : jobs) {
        auto [m, x] = j.get();
        Json e = to_json(m);
        e["intersection"] = to_json(x);
        arr.push_back(e);
        csv += std::to_string(m.k) + "," + std::to_string(m.dim) + "," + to_string(m.cert.verdict) + "," +
               m.disc_squarefree.str() + "," + m.sn_evidence + "," + x.verdict + "\n";
        r.ok = r.ok && m.cert.irreducible() && x.coprime();
    }
    r.json = ks.size() == 1 ? arr[0] : Json{{"reports", arr}};
    r.csv = csv;
    return r;
}

Result cmd_finiteness(const std::string& a, const std::string& b, int kmax, int lmax) {
    Rational ra, rb;
    try {
        ra = parse_rational(a);
        rb = parse_rational(b);
    } catch (const std::exception&) {
        throw UsageError("a and b must be rationals p/q");
    }
    auto rep = finiteness_scan(ra, rb, kmax, lmax);
    Result r;
    r.json = to_json(rep);
    r.csv = rep.csv();
    bool rever = true;
    for (const auto& s : rep.survivors) rever = rever && s.reverified;
    r.ok = rep.complete && rep.monotone_envelope && rever;
    return r;
}

Result cmd_bounds(int k, const std::string& conductors) {
    Result r;
    Json arr = Json::array();
    std::string csv = "k,conductor,character,lower,actual,upper,holds\n";
    for (const auto& s : split(conductors, ',')) {
        const int l = parse_int(s, "conductor");
        if (l < 1) throw UsageError("conductor must be positive");
        for (const auto& chi : primitive_characters(l)) {
            if (chi.parity() != (k % 2 == 0 ? 1 : -1)) continue;
            auto b = bernoulli_bound_check(k, chi);
            arr.push_back(to_json(b));
            csv += std::to_string(k) + "," + std::to_string(l) + "," + b.character + "," + fixed_real(b.lower) + "," +
                   fixed_real(b.actual) + "," + fixed_real(b.upper) + "," + (b.holds ? "true" : "false") + "\n";
            r.ok = r.ok && b.holds;
        }
    }
    r.json = Json{{"k", k}, {"rows", arr}, {"all_hold", r.ok}};
    r.csv = csv;
    return r;
}

std::vector<int> parse_range(const std::string& s) {
    const auto p = s.find("..");
    if (p == std::string::npos) throw UsageError("range must be k1..k2");
    const int a = parse_int(s.substr(0, p), "range start"), b = parse_int(s.substr(p + 2), "range end");
    if (a > b) throw UsageError("empty range");
    std::vector<int> out;
    for (int k = a; k <= b; ++k)
        if (k % 2 == 0 && dim_Sk(k) >= 1) out.push_back(k);
    return out;
}

void emit(const Config& c, const std::string& cmd, const Result& r) {
    std::string text;
    if (c.output == "json") {
        text = r.json.dump(2) + "\n";
    } else if (c.output == "csv") {
        if (r.csv.empty()) throw UsageError("csv output is not available for " + cmd);
        text = r.csv;
    } else {
        render_text(r.json, text);
    }
    if (c.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(c.out);
        if (!f) throw UsageError("cannot open " + c.out);
        f << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact modular form identities, Hecke data and scans"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--output", cfg.output, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", cfg.out, "write to file instead of stdout");
    app.add_option("--prec", cfg.prec, "number of q-expansion coefficients")->check(CLI::PositiveNumber);
    app.add_option("--tol-zero", cfg.tol_zero, "bisection tolerance on theta")->check(CLI::PositiveNumber);
    app.add_option("--tol-match", cfg.tol_match, "j-value matching tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "root finder seed");

    std::string form, what, conductors, range, fa = "1", fb = "1";
    int k = 0, n = 0, kmax = 40, lmax = 20;
    bool cusp = false;

    auto* qexp = app.add_subcommand("qexp", "q-expansion: E4, E6, E12, Ek:k, Delta, j, EisNk:psi,phi,t,k");
    qexp->add_option("form", form)->required();
    auto* basis = app.add_subcommand("basis", "echelon basis of M_k or S_k");
    basis->add_option("k", k)->required();
    basis->add_flag("--cusp", cusp);
    auto* hecke = app.add_subcommand("hecke", "T_n on S_k and its characteristic polynomial");
    hecke->add_option("n", n)->required();
    hecke->add_option("k", k)->required();
    auto* eigen = app.add_subcommand("eigen", "normalized eigenform over its Hecke field");
    eigen->add_option("k", k)->required();
    auto* decomp = app.add_subcommand("decompose", "f^2 in the weight-2k eigenbasis");
    decomp->add_option("k", k)->required();
    auto* verify = app.add_subcommand("verify", "ramanujan, e24, e32, table1 or all");
    verify->add_option("what", what)->required();
    auto* zeros = app.add_subcommand("zeros", "j at arc zeros of E_{12n}");
    zeros->add_option("n", n)->required();
    auto* maeda = app.add_subcommand("maeda", "irreducibility, discriminants, Hecke field intersection");
    maeda->add_option("k", k);
    maeda->add_option("--range", range, "k1..k2");
    auto* fin = app.add_subcommand("finiteness", "bounded search for b + 2 beta = alpha");
    fin->add_option("--a", fa);
    fin->add_option("--b", fb);
    fin->add_option("--kmax", kmax);
    fin->add_option("--lmax", lmax);
    auto* bounds = app.add_subcommand("bounds", "Bernoulli bound sandwich for primitive characters");
    bounds->add_option("k", k)->required();
    bounds->add_option("conductors", conductors, "comma separated")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return 2;
    }

    std::string cmd = app.get_subcommands().front()->get_name();
    try {
        Result r;
        if (*qexp) r = cmd_qexp(cfg, form);
        else if (*basis) r = cmd_basis(cfg, k, cusp);
        else if (*hecke) r = cmd_hecke(cfg, n, k);
        else if (*eigen) r = cmd_eigen(cfg, k);
        else if (*decomp) r = cmd_decompose(cfg, k);
        else if (*verify) r = cmd_verify(cfg, what);
        else if (*zeros) r = cmd_zeros(cfg, n);
        else if (*maeda) {
            if (range.empty() == (k == 0)) throw UsageError("maeda expects either k or --range k1..k2");
            r = cmd_maeda(range.empty() ? std::vector<int>{k} : parse_range(range));
        } else if (*fin) r = cmd_finiteness(fa, fb, kmax, lmax);
        else r = cmd_bounds(k, conductors);
        emit(cfg, cmd, r);
        return r.ok ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid_argument: " << e.what() << "\n";
    } catch (const std::domain_error& e) {
        std::cerr << "error: domain_error: " << e.what() << "\n";
    } catch (const Unsupported& e) {
        std::cerr << "error: unsupported: " << e.what() << "\n";
    } catch (const std::logic_error& e) {
        std::cerr << "error: failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
    }
    return 2;
}
