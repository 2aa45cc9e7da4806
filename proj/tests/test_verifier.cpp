#include <gtest/gtest.h>

#include <cstdlib>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qrank/hecke_rogers.hpp"
#include "qrank/verifier/dyson.hpp"
#include "qrank/verifier/report.hpp"

using namespace qrank;
using namespace qrank::verifier;

namespace {

struct EnvGuard {
    explicit EnvGuard(const char* v) { setenv("QRANK_DEFAULT_ORDER", v, 1); }
    ~EnvGuard() { unsetenv("QRANK_DEFAULT_ORDER"); }
};

} // namespace

TEST(Registry, AnchorsMatchInScopeManifest)
{
    std::set<std::string> covered;
    for (const auto& s : registry()) {
        const auto toks = anchor_tokens(s);
        EXPECT_FALSE(toks.empty()) << s.name;
        covered.insert(toks.begin(), toks.end());
    }
    const std::set<std::string> expected(in_scope_anchors().begin(), in_scope_anchors().end());
    for (const auto& a : expected)
        EXPECT_TRUE(covered.count(a)) << "no check for " << a;
    for (const auto& a : covered)
        EXPECT_TRUE(expected.count(a)) << "anchor outside the manifest: " << a;
}

TEST(Registry, NamesSortedUniqueAndDependenciesResolve)
{
    const auto& r = registry();
    for (std::size_t i = 1; i < r.size(); ++i)
        EXPECT_LT(r[i - 1].name, r[i].name);
    for (const auto& s : r) {
        for (const auto& d : s.dependencies)
            EXPECT_NE(find_check(d), nullptr) << s.name << " -> " << d;
        EXPECT_LE(s.default_order, s.max_order) << s.name;
    }
}

TEST(Registry, RequiredChecksPresent)
{
    for (const char* n : {"jacobi_triple", "rankid1", "rankid2", "rankid3", "rankid4", "fHRid", "fgjzmid", "jzqm",
                          "weier", "mid1a", "mid1b", "mid1c", "mid1d", "himo_f121", "rzq_g", "g_m", "diss5_1", "diss5_2",
                          "diss5_3", "sift5_1", "sift5_2", "sift5_3", "zR5dis", "zR52dis_a", "zR52dis_b", "eq1", "eq2",
                          "eq3", "r3_zero", "detD_expansion", "detD_eta", "jsimp", "r2r4_products", "ram_r1r2r4",
                          "ram_r0", "ram_r3", "ram_full", "u50_lemma", "u54_lemma", "v513_reindex", "a50", "bigsum50",
                          "rtwid_phi", "u50_left", "zth7dis", "zR7dis1_a", "zR7dis1_b", "zR7dis1_c", "eqn71", "eqn72",
                          "eqn73", "mod7_products"})
        EXPECT_NE(find_check(n), nullptr) << n;
}

TEST(RunCheck, UnregisteredNameIsError)
{
    const auto r = run_check("no_such_check");
    EXPECT_EQ(r.status, Status::error);
    EXPECT_EQ(r.detail, "unregistered check");
}

TEST(RunCheck, EmptyFilterRunsNothing)
{
    RunOptions o;
    o.all = false;
    EXPECT_TRUE(run_all(o).empty());
}

TEST(RunCheck, OrderAboveLimitIsPrecisionErrorAndIsolated)
{
    RunOptions o;
    o.all = false;
    o.names = {"jsimp", "rankid1"};
    o.order = 250;
    const auto res = run_all(o);
    ASSERT_EQ(res.size(), 2u);
    EXPECT_EQ(res[0].name, "jsimp");
    EXPECT_EQ(res[0].status, Status::pass);
    EXPECT_EQ(res[1].status, Status::error);
    EXPECT_EQ(res[1].detail.rfind("precision", 0), 0u) << res[1].detail;
    EXPECT_EQ(exit_code(res), 3);
}

TEST(RunCheck, ParallelMatchesSerial)
{
    RunOptions o;
    o.all = false;
    o.names = {"jsimp", "hre12", "detD_expansion", "a50", "t4e_hr"};
    o.order = 30;
    const auto serial = run_all(o);
    o.jobs = 3;
    const auto parallel = run_all(o);
    ASSERT_EQ(serial.size(), parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        EXPECT_EQ(serial[i].name, parallel[i].name);
        EXPECT_EQ(serial[i].status, parallel[i].status);
    }
}

TEST(RunCheck, DefaultOrderFromEnvironment)
{
    const CheckSpec* s = find_check("jsimp");
    const CheckSpec* oracle = find_check("dyson5");
    ASSERT_TRUE(s && oracle);
    {
        EnvGuard g("25");
        EXPECT_EQ(effective_default_order(*s), 25);
        EXPECT_EQ(effective_default_order(*oracle), oracle->default_order);
        EXPECT_EQ(run_check("jsimp").order_checked, 25);
    }
    {
        EnvGuard g("abc");
        EXPECT_THROW(effective_default_order(*s), invalid_argument);
        EXPECT_EQ(run_check("jsimp").status, Status::error);
    }
    EXPECT_EQ(effective_default_order(*s), s->default_order);
}

TEST(Pipelines, R3VanishesBothRoutes)
{
    const auto r = run_check("r3_zero", 40);
    EXPECT_EQ(r.status, Status::pass) << r.detail;
}

TEST(Pipelines, DetDPrintedExpansion)
{
    const auto r = run_check("detD_expansion", 11);
    EXPECT_EQ(r.status, Status::pass) << r.detail;
    EXPECT_EQ(r.order_checked, 11);
}

TEST(Pipelines, ThirdSiftedMod7IdentityWithFactorQ)
{
    const auto r = run_check("zR7dis1_c", 20);
    EXPECT_EQ(r.status, Status::pass) << r.detail;
}

TEST(Tally, FirstMismatchReported)
{
    Tally t(10);
    const auto E = product_build<Integer>(presets::euler(), 10);
    t.equal("same", E, E);
    t.equal("perturbed", E, E + Series<Integer>::monomial(Integer(3), 5, 10));
    t.equal("skipped after failure", E, -E);
    const Verdict v = t.verdict();
    EXPECT_FALSE(v.pass);
    ASSERT_TRUE(v.mismatch);
    EXPECT_EQ(v.mismatch->exponent, 5);
    EXPECT_EQ(v.mismatch->lhs, "1");
    EXPECT_EQ(v.mismatch->rhs, "4");
    EXPECT_EQ(v.label, "perturbed");
}

TEST(Tally, RotationSkipsNonGeneric)
{
    const std::vector<int> specs{1, 0, 2, 3};
    int visited = 0;
    const Verdict v = rotate<int>(
        5, specs, 3,
        [&](const int& s, Tally&) {
            ++visited;
            if (s == 0)
                throw non_generic("pole");
        },
        [](const int& s) { return std::to_string(s); });
    EXPECT_TRUE(v.pass);
    EXPECT_EQ(visited, 4);
    EXPECT_THROW(rotate<int>(
                     5, std::vector<int>{0, 0, 1}, 2,
                     [](const int& s, Tally&) {
                         if (s == 0)
                             throw non_generic("pole");
                     },
                     [](const int& s) { return std::to_string(s); }),
                 non_generic);
}

TEST(ExitCode, FailOutranksError)
{
    CheckResult pass, fail, err;
    pass.status = Status::pass;
    fail.status = Status::fail;
    err.status = Status::error;
    EXPECT_EQ(exit_code({}), 0);
    EXPECT_EQ(exit_code({pass, pass}), 0);
    EXPECT_EQ(exit_code({pass, err}), 3);
    EXPECT_EQ(exit_code({err, fail}), 1);
}

TEST(Report, JsonFields)
{
    CheckResult ok;
    ok.name = "a";
    ok.anchor = "eq:A";
    ok.status = Status::pass;
    ok.order_checked = 60;
    CheckResult bad = ok;
    bad.name = "b";
    bad.status = Status::fail;
    bad.first_mismatch = Mismatch{7, "1 + zeta5", "-2"};
    std::ostringstream os;
    write_json_report({ok, bad}, os);
    const auto j = nlohmann::json::parse(os.str());
    ASSERT_EQ(j.size(), 2u);
    for (const char* key : {"name", "paper_anchor", "status", "order_checked", "first_mismatch", "wall_ms"})
        EXPECT_TRUE(j[0].contains(key)) << key;
    EXPECT_TRUE(j[0]["first_mismatch"].is_null());
    EXPECT_EQ(j[1]["status"], "FAIL");
    EXPECT_EQ(j[1]["first_mismatch"]["exponent"], 7);
    EXPECT_EQ(j[1]["first_mismatch"]["lhs"], "1 + zeta5");
}

TEST(Report, TextTable)
{
    CheckResult bad;
    bad.name = "some_check";
    bad.anchor = "eq:X";
    bad.status = Status::fail;
    bad.detail = "lhs = rhs";
    bad.first_mismatch = Mismatch{3, "2", "5"};
    std::ostringstream os;
    write_text_report({bad}, os);
    const std::string s = os.str();
    EXPECT_NE(s.find("some_check"), std::string::npos);
    EXPECT_NE(s.find("FAIL"), std::string::npos);
    EXPECT_NE(s.find("q^3"), std::string::npos);
    EXPECT_NE(s.find("0 passed, 1 failed, 0 errors"), std::string::npos);
}

TEST(Report, UnwritablePathThrows)
{
    EXPECT_THROW(emit_report({}, ReportFormat::text, "/nonexistent-dir/report.txt"), std::runtime_error);
}

TEST(Dyson, ModElevenFailsAtSix)
{
    const auto r = dyson_oracle(11, 66);
    ASSERT_TRUE(r.first_unequal);
    EXPECT_EQ(*r.first_unequal, 6);
    EXPECT_TRUE(dyson_verdict(r).pass);
}

TEST(Dyson, ModFiveSmall)
{
    const auto r = dyson_oracle(5, 54);
    EXPECT_FALSE(r.first_unequal);
    EXPECT_EQ(r.cases, 11);
    EXPECT_TRUE(dyson_verdict(r).pass);
}

TEST(Catalog, KnownSeries)
{
    const CatalogEntry* e = find_series("E");
    ASSERT_NE(e, nullptr);
    const auto c = e->coefficients(7);
    const std::vector<std::string> expect{"1", "-1", "-1", "0", "0", "1", "0", "1"};
    ASSERT_EQ(c.size(), expect.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        EXPECT_EQ(c[i].second, expect[i]) << i;
    const auto d = find_series("detD")->coefficients(4);
    EXPECT_EQ(d[1].second, "-6");
    EXPECT_EQ(d[4].second, "-19");
    EXPECT_EQ(find_series("nope"), nullptr);
    for (const char* n : {"theta4", "R_at_zeta5", "R_at_zeta7", "phi", "psi", "ramA", "ramB", "ramC", "ramD"})
        EXPECT_NE(find_series(n), nullptr) << n;
}
