#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef CURVESING_CLI_PATH
#error "CURVESING_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string out_file = "cli_test_stdout.txt";
    std::string cmd = std::string(CURVESING_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::remove(out_file.c_str());
    int code = -1;
    if (rc != -1) code = WEXITSTATUS(rc);
    return RunResult{code, ss.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("exit codes: success, computational failure, usage error, help") {
    CHECK(run_cli("invariants \"x^3 - y^2\"").exit_code == 0);
    RunResult nonisolated = run_cli("invariants \"x^2\"");
    CHECK(nonisolated.exit_code == 1);
    CHECK(nonisolated.out.find("non-isolated") != std::string::npos);
    CHECK(run_cli("invariants \"x + \"").exit_code == 2);
    CHECK(run_cli("invariants \"x^3 - y^2\" --no-such-flag").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("").exit_code == 2);  // a subcommand is required
}

TEST_CASE("human table and JSON report identical numbers") {
    RunResult table = run_cli("invariants \"x^7 + x^3*y^4 + y^6\"");
    RunResult json = run_cli("invariants \"x^7 + x^3*y^4 + y^6\" --json");
    REQUIRE(table.exit_code == 0);
    REQUIRE(json.exit_code == 0);
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["mu"] == 30);
    CHECK(j["tau"] == 27);
    CHECK(j["rho"]["num"] == "10");
    CHECK(j["rho"]["den"] == "9");
    CHECK(table.out.find("mu: 30") != std::string::npos);
    CHECK(table.out.find("tau: 27") != std::string::npos);
    CHECK(table.out.find("rho: 10/9") != std::string::npos);
}

TEST_CASE("json record matches the published schema shape") {
    RunResult json = run_cli("invariants \"x^5 + y^5 + x^3*y^3\" --json");
    REQUIRE(json.exit_code == 0);
    auto j = nlohmann::json::parse(json.out);
    for (const char* key : {"input", "mu", "tau", "tau_prime", "m", "r", "delta", "lambda", "rho",
                            "omega_codim", "quasihomogeneous", "checks"})
        CHECK(j.contains(key));
    CHECK(j["mu"].is_number_unsigned());
    CHECK(j["quasihomogeneous"].is_boolean());
    CHECK(j["checks"].is_array());
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("status"));
        CHECK(c.contains("detail"));
    }
    // reducible germ: omega_codim is null
    CHECK(j["omega_codim"].is_null());
}

TEST_CASE("scan emits the family tau values") {
    RunResult r = run_cli(
        "scan --family \"x^(2m+1)+x^m*y^(m+1)+y^(2m)\" --range 2..3 --json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["entries"].size() == 2);
    CHECK(j["entries"][0]["record"]["tau"] == 12);
    CHECK(j["entries"][1]["record"]["tau"] == 27);
    CHECK(j["summary"]["rho_monotonicity"] == "strictly-increasing");
}

TEST_CASE("search is deterministic and resumable through the CLI") {
    std::string f1 = "cli_search_1.jsonl", f2 = "cli_search_2.jsonl";
    std::remove(f1.c_str());
    std::remove(f2.c_str());
    std::string args = "search --support \"x^3,y^4,x^2*y^2\" --samples 5 --seed 42 --out ";
    CHECK(run_cli(args + f1).exit_code == 0);
    CHECK(run_cli(args + f2).exit_code == 0);
    CHECK(slurp(f1) == slurp(f2));
    // a second invocation over an existing complete file keeps it unchanged
    std::string before = slurp(f1);
    CHECK(run_cli(args + f1).exit_code == 0);
    CHECK(slurp(f1) == before);
    std::remove(f1.c_str());
    std::remove(f2.c_str());
}

TEST_CASE("corpus prints at least fifteen germs and verify accepts a file") {
    RunResult corpus = run_cli("corpus");
    REQUIRE(corpus.exit_code == 0);
    auto j = nlohmann::json::parse(corpus.out);
    CHECK(j.is_array());
    CHECK(j.size() >= 15);

    // verify a small file corpus, then a deliberately wrong one
    {
        std::ofstream f("cli_corpus_ok.json");
        f << R"([{"name":"cusp","poly":"y^2 - x^3","expect":{"mu":2,"tau":2}}])";
    }
    CHECK(run_cli("verify cli_corpus_ok.json").exit_code == 0);
    {
        std::ofstream f("cli_corpus_bad.json");
        f << R"([{"name":"cusp-bad","poly":"y^2 - x^3","expect":{"tau":3}}])";
    }
    RunResult bad = run_cli("verify cli_corpus_bad.json");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("cusp-bad") != std::string::npos);
    CHECK(bad.out.find("tau") != std::string::npos);
    {
        std::ofstream f("cli_corpus_empty.json");
        f << "[]";
    }
    RunResult empty = run_cli("verify cli_corpus_empty.json");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out.find("0 items") != std::string::npos);
    std::remove("cli_corpus_ok.json");
    std::remove("cli_corpus_bad.json");
    std::remove("cli_corpus_empty.json");
}

TEST_CASE("omega subcommand rejects reducible germs") {
    RunResult r = run_cli("omega \"y^2 - x^2\"");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("reducible") != std::string::npos);
    CHECK(run_cli("omega \"y^2 - x^3\"").exit_code == 0);
}

TEST_CASE("step-bound environment variable reaches the engine") {
    std::string out_file = "cli_env_test.txt";
    std::string cmd = std::string("CURVESING_STEP_BOUND=2 ") + CURVESING_CLI_PATH +
                      " invariants \"x^5 + y^5 + x^3*y^3\" > " + out_file + " 2>&1";
    int rc = std::system(cmd.c_str());
    int code = rc == -1 ? -1 : WEXITSTATUS(rc);
    std::string out = slurp(out_file);
    std::remove(out_file.c_str());
    CHECK(code == 1);
    CHECK(out.find("step bound") != std::string::npos);
}
