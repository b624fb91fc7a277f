#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    int code = -1;
    std::string out, err;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string errfile = ::testing::TempDir() + "mfid_cli_err.txt";
    const std::string cmd = env + " " + MFID_CLI + std::string(" ") + args + " 2>" + errfile;
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    std::ifstream f(errfile);
    std::stringstream ss;
    ss << f.rdbuf();
    r.err = ss.str();
    return r;
}

nlohmann::json js(const Run& r) { return nlohmann::json::parse(r.out); }

bool single_error_line(const std::string& s) {
    return s.rfind("error: ", 0) == 0 && s.find('\n') == s.size() - 1;
}

}  // namespace

TEST(Cli, VerifyReports) {
    auto r = run("verify ramanujan --output json");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(js(r)["reports"][0]["status"], "Verified");
    for (const char* w : {"e24", "e32"}) EXPECT_EQ(run(std::string("verify ") + w).code, 0) << w;
    // exit code tracks the aggregated status
    auto all = run("verify all --output json");
    const bool ok = js(all)["all_verified"];
    EXPECT_EQ(all.code, ok ? 0 : 1);
    auto t1 = run("verify table1 --output json");
    EXPECT_EQ(t1.code, js(t1)["all_verified"].get<bool>() ? 0 : 1);
}

TEST(Cli, UsageErrors) {
    for (const char* a : {"verify nothing", "qexp E3", "qexp Foo", "hecke 2 10", "bogus", "zeros x", "maeda",
                          "basis 12 --output xml", "eigen 24 --output csv", "bounds 4 0"}) {
        auto r = run(a);
        EXPECT_EQ(r.code, 2) << a;
        EXPECT_TRUE(single_error_line(r.err)) << a << ": " << r.err;
    }
    EXPECT_EQ(run("qexp E4", "MFID_PREC=abc").code, 2);
}

TEST(Cli, QExpansion) {
    auto r = run("qexp Delta --prec 8 --output csv");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n,coefficient\n0,0\n1,1\n2,-24\n3,252\n4,-1472\n5,4830\n6,-6048\n7,-16744\n");
    auto e = js(run("qexp E4 --output json", "MFID_PREC=7"));
    EXPECT_EQ(e["coefficients"].size(), 7u);
    EXPECT_EQ(e["coefficients"][1], "240");
    EXPECT_EQ(js(run("qexp Ek:12 --prec 3 --output json"))["coefficients"][1], "65520/691");
    EXPECT_EQ(js(run("qexp j --prec 3 --output json"))["coefficients"][2], "196884");
    auto eis = run("qexp EisNk:1.0,4.1,1,3 --prec 6 --output json");
    EXPECT_EQ(eis.code, 0) << eis.err;
    EXPECT_EQ(js(eis)["level"], 4);
}

TEST(Cli, HeckeAndEigen) {
    auto h = js(run("hecke 2 24 --output json"));
    EXPECT_EQ(h["charpoly"]["coeffs"], nlohmann::json::array({"-20468736", "-1080", "1"}));
    auto e = js(run("eigen 24 --output json"));
    EXPECT_EQ(e["field"]["degree"], 2);
    EXPECT_EQ(e["coefficients"][1], nlohmann::json::array({"1", "0"}));
    auto b = js(run("basis 12 --cusp --output json"));
    EXPECT_EQ(b["dim"], 1);
}

TEST(Cli, Decompose) {
    auto r = run("decompose 12 --output json");
    EXPECT_EQ(r.code, 0);
    auto j = js(r);
    EXPECT_EQ(j["c_surd"], "1/24/sqrt(144169)");
    EXPECT_EQ(j["c_in_K2"], nlohmann::json::array({"-15/1153352", "1/41520672"}));
    EXPECT_TRUE(j["all_nonzero"].get<bool>());
}

TEST(Cli, ZerosAndDeterminism) {
    auto r = run("zeros 1 --output json");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(js(r)["j_shift"], "432000/691");
    auto a = run("zeros 2 --output json --seed 5"), b = run("zeros 2 --output json --seed 5");
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(run("zeros 2 --tol-match 1e-40").code, 1);
    const std::string path = ::testing::TempDir() + "mfid_zeros.json";
    EXPECT_EQ(run("zeros 1 --output json --out " + path).code, 0);
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_EQ(ss.str(), r.out);
}

TEST(Cli, Scans) {
    auto m = run("maeda 24 --output json");
    EXPECT_EQ(m.code, 0);
    EXPECT_EQ(js(m)["disc_squarefree"], "144169");
    EXPECT_EQ(js(m)["intersection"]["verdict"], "coprime");
    auto rg = js(run("maeda --range 24..28 --output json"));
    ASSERT_EQ(rg["reports"].size(), 3u);
    EXPECT_EQ(rg["reports"][0]["k"], 24);
    EXPECT_EQ(rg["reports"][2]["k"], 28);
    auto f = run("finiteness --a 1 --b 1 --kmax 20 --lmax 10 --output json");
    EXPECT_EQ(f.code, 0);
    EXPECT_EQ(js(f)["k_bound"], 18);
    auto c = run("finiteness --a 1 --b 1 --kmax 6 --lmax 5 --output csv");
    EXPECT_EQ(c.out.rfind("k,conductor,character,abs_alpha,abs_beta,excluded_by\n", 0), 0u);
    auto bd = run("bounds 3 4,7 --output json");
    EXPECT_EQ(bd.code, 0);
    EXPECT_TRUE(js(bd)["all_hold"].get<bool>());
}
