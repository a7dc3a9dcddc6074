#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mldeg/cli.hpp"
#include "support.hpp"

#include <cstdlib>

using namespace mldeg;

namespace {

std::string fixture(const std::string& name) { return std::string(MLDEG_FIXTURE_DIR) + "/" + name; }

RunResult run_file(Mode mode, const std::string& name, std::uint64_t seed = 0)
{
    JobSpec job;
    job.mode = mode;
    job.input_path = fixture(name);
    job.seed = seed;
    return run(job);
}

Json frobenius(unsigned n, unsigned d)
{
    Json doc;
    doc["n"] = n;
    Json vars = Json::array();
    Json polys = Json::array();
    for (unsigned i = 0; i <= n; ++i) {
        vars.push_back("x" + std::to_string(i));
        std::vector<unsigned> e(n + 1, 0);
        e[i] = d;
        polys.push_back(Json{{"terms", Json::array({Json{{"coeff", "1"}, {"exponents", e}}})}});
    }
    doc["variables"] = vars;
    doc["polynomials"] = polys;
    return doc;
}

ErrorCode schema_code(const std::string& text)
{
    try {
        (void)parse_problem(Json::parse(text));
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

} // namespace

TEST_CASE("schema validation")
{
    const char* bad[] = {
        R"([])",
        R"({"variables":["x0","x1"],"polynomials":[]})",
        R"({"n":0,"variables":["x0"],"polynomials":[{"terms":[]}]})",
        R"({"n":1,"variables":["x0"],"polynomials":[{"terms":[]}]})",
        R"({"n":1,"variables":["x0","x0"],"polynomials":[{"terms":[]}]})",
        R"({"n":1,"variables":["x0","1x"],"polynomials":[{"terms":[]}]})",
        R"({"n":1,"variables":["x0","x1"],"polynomials":[]})",
        R"({"n":1,"variables":["x0","x1"],"polynomials":[{"nope":[]}]})",
        R"({"n":1,"variables":["x0","x1"],"polynomials":[{"terms":[{"coeff":1,"exponents":[1,0]}]}]})",
        R"({"n":1,"variables":["x0","x1"],"polynomials":[{"terms":[{"coeff":"1/0","exponents":[1,0]}]}]})",
        R"({"n":1,"variables":["x0","x1"],"polynomials":[{"terms":[{"coeff":"abc","exponents":[1,0]}]}]})",
        R"({"n":1,"variables":["x0","x1"],"polynomials":[{"terms":[{"coeff":"1","exponents":[1]}]}]})",
        R"({"n":1,"variables":["x0","x1"],"polynomials":[{"terms":[{"coeff":"1","exponents":[-1,0]}]}]})",
        R"({"n":1,"variables":["x0","x1"],"polynomials":[{"terms":[{"coeff":"1","exponents":[1.5,0]}]}]})",
    };
    for (const char* text : bad) {
        CAPTURE(text);
        CHECK(schema_code(text) == ErrorCode::InvalidInput);
    }
    ProblemInput ok = parse_problem(Json::parse(
        R"({"n":1,"variables":["a","b"],"polynomials":[{"terms":[{"coeff":"-1.25","exponents":[1,0]},{"coeff":"3/6","exponents":[0,1]}]}]})"));
    CHECK(ok.polynomials[0] == testing::P("-5/4*x0 + 1/2*x1", 2));

    RunResult r = run_file(Mode::Theorem, "bad_schema.json");
    CHECK(r.exit_code == 2);
    CHECK(r.report["error"]["code"] == "InvalidInput");
    RunResult missing = run_file(Mode::Theorem, "does_not_exist.json");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("verify on Frobenius")
{
    RunResult r = run_file(Mode::Verify, "frobenius_n2_d2.json");
    CHECK(r.exit_code == 0);
    CHECK(r.report["ml_degree"] == 0);
    CHECK(r.report["verdict"] == "match");
    CHECK(r.report["values"]["theorem"] == 0);
    CHECK(r.report["values"]["euler"] == 0);
    CHECK(r.report["values"]["critical"] == 0);
    CHECK(r.report["profile"]["d_f"] == 2);
    CHECK(r.report["profile"]["reduced_degrees"] == Json::array({1, 1, 1}));
    CHECK(r.report["skipped_oracles"].empty());

    JobSpec job;
    job.mode = Mode::Verify;
    RunResult big = run_problem(job, parse_problem(frobenius(3, 2)));
    CHECK(big.exit_code == 0);
    CHECK(big.report["verdict"] == "match");
    CHECK(big.report["skipped_oracles"].size() == 1);
    CHECK(big.report["skipped_oracles"][0]["name"] == "critical");
}

TEST_CASE("negative paths")
{
    struct Case {
        const char* file;
        const char* code;
    } cases[] = {{"not_dominant.json", "NotDominant"},
                 {"common_factor.json", "CommonFactor"},
                 {"degree_mismatch.json", "DegreeMismatch"}};
    for (const auto& c : cases) {
        for (Mode mode : {Mode::Theorem, Mode::Verify}) {
            RunResult r = run_file(mode, c.file);
            CAPTURE(c.file);
            CHECK(r.exit_code == 3);
            CHECK(r.report["error"]["code"] == c.code);
            CHECK(r.report["ml_degree"].is_null());
        }
    }
    RunResult nonlinear = run_file(Mode::OracleEuler, "frobenius_n2_d2.json");
    CHECK(nonlinear.exit_code == 3);
    CHECK(nonlinear.report["error"]["code"] == "NotLinear");
}

TEST_CASE("oracle modes")
{
    RunResult lines = run_file(Mode::OracleEuler, "four_lines.json");
    CHECK(lines.exit_code == 0);
    CHECK(lines.report["ml_degree"] == 1);
    CHECK(lines.report["oracles"][0]["name"] == "euler");

    RunResult crit = run_file(Mode::OracleCritical, "four_lines.json", 5);
    CHECK(crit.exit_code == 0);
    CHECK(crit.report["ml_degree"] == 1);
    CHECK(crit.report["oracles"][0]["agreed"] == true);
    CHECK(crit.report["oracles"][0]["trials"].size() == 2);

    RunResult conics = run_file(Mode::Verify, "conics.json", 11);
    CHECK(conics.exit_code == 0);
    CHECK(conics.report["ml_degree"] == 9);
    CHECK(conics.report["values"]["critical"] == 9);
    CHECK(conics.report["verdict"] == "match");
    CHECK(conics.report["skipped_oracles"][0]["name"] == "euler");
}

TEST_CASE("budget exhaustion")
{
    JobSpec job;
    job.mode = Mode::OracleCritical;
    job.input_path = fixture("conics.json");
    job.budget.max_basis = 2;
    RunResult r = run(job);
    CHECK(r.exit_code == 5);
    CHECK(r.report["error"]["code"] == "BudgetExceeded");

    job.mode = Mode::Verify;
    RunResult v = run(job);
    CHECK(v.exit_code == 0);
    CHECK(v.report["verdict"] == "match");
    CHECK(v.report["warnings"].size() == 2);

    setenv("MLDEG_BUDGET_BASIS", "2", 1);
    CHECK(budget_from_environment().max_basis == 2);
    unsetenv("MLDEG_BUDGET_BASIS");
}

TEST_CASE("reports are deterministic")
{
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
        std::string first = run_file(Mode::Verify, "conics.json", seed).report.dump(2);
        for (int k = 0; k < 3; ++k)
            CHECK(run_file(Mode::Verify, "conics.json", seed).report.dump(2) == first);
    }
    CHECK(run_file(Mode::Verify, "conics.json", 1).report.dump() != run_file(Mode::Verify, "conics.json", 2).report.dump());
}

TEST_CASE("echoed polynomials round-trip")
{
    Rng rng(4);
    for (int iter = 0; iter < 120; ++iter) {
        unsigned nv = static_cast<unsigned>(rng.uniform(2, 4));
        ProblemInput in;
        in.n = nv - 1;
        in.variables = default_variable_names(nv);
        for (int k = 0; k < 2; ++k) {
            Polynomial f = testing::random_poly(rng, nv, 4, 5, 7);
            if (rng.uniform(0, 1))
                f *= Polynomial::constant(nv, Rational(1, static_cast<long>(rng.uniform(2, 9))));
            in.polynomials.push_back(f);
        }
        Json doc = problem_to_json(in);
        ProblemInput back = parse_problem(Json::parse(doc.dump()));
        REQUIRE(back.polynomials.size() == in.polynomials.size());
        for (std::size_t i = 0; i < in.polynomials.size(); ++i) {
            CHECK(back.polynomials[i] == in.polynomials[i]);
            CHECK(parse_polynomial(doc["polynomials"][i]["text"].get<std::string>(), in.variables)
                  == in.polynomials[i]);
        }
    }
}
