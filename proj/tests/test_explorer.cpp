#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "curvesing/explorer.hpp"

using namespace curvesing;

namespace {

const VariableSet XY{{"x", "y"}};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string temp_path(const std::string& tag) {
    return std::string("explorer_test_") + tag + ".jsonl";
}

}  // namespace

TEST_CASE("template instantiation") {
    CHECK(parse_polynomial(instantiate_template("x^(2m+1)+x^m*y^(m+1)+y^(2m)", "m", 2), XY) ==
          parse_polynomial("x^5 + x^2*y^3 + y^4", XY));
    CHECK(parse_polynomial(instantiate_template("x^(2m+1)+y^(2m+1)+x^(m+1)*y^(m+1)", "m", 3), XY) ==
          parse_polynomial("x^7 + y^7 + x^4*y^4", XY));
    CHECK(instantiate_template("y^2 - x^(2m+1)", "m", 1) == "y^2 - x^3");
    CHECK(instantiate_template("x^(m^2)", "m", 3) == "x^9");
    CHECK(instantiate_template("m*x + y^2", "m", 4) == "(4)*x + y^2");
    CHECK_THROWS_AS(instantiate_template("x^(m/2)", "m", 3), DomainError);
}

TEST_CASE("family scan: the irreducible family") {
    FamilyTemplate t;
    t.text = "x^(2m+1)+x^m*y^(m+1)+y^(2m)";
    t.lo = 2;
    t.hi = 4;
    ScanResult r = scan_family(t);
    REQUIRE(r.entries.size() == 3);
    std::vector<std::uint64_t> taus, mus;
    std::vector<Rational> rhos;
    for (const auto& e : r.entries) {
        REQUIRE(e.record.has_value());
        taus.push_back(e.record->tau);
        mus.push_back(e.record->mu);
        rhos.push_back(*e.record->rho);
    }
    CHECK(mus == std::vector<std::uint64_t>{12, 30, 56});
    CHECK(taus == std::vector<std::uint64_t>{12, 27, 48});
    CHECK(rhos == std::vector<Rational>{Rational(1), Rational(10, 9), Rational(7, 6)});
    CHECK(r.summary.rho_monotonicity == "strictly-increasing");
    CHECK(r.summary.check_failures.empty());
    CHECK(*r.summary.max_rho == Rational(7, 6));
}

TEST_CASE("family scan: smooth-branch family and the A_even line") {
    FamilyTemplate t;
    t.text = "x^(2m+1)+y^(2m+1)+x^(m+1)*y^(m+1)";
    t.lo = 2;
    t.hi = 2;
    ScanResult r = scan_family(t);
    REQUIRE(r.entries.size() == 1);
    CHECK(*r.entries[0].record->rho == Rational(16, 15));

    FamilyTemplate a;
    a.text = "y^2 - x^(2m+1)";
    a.lo = 1;
    a.hi = 3;
    ScanResult ra = scan_family(a);
    for (const auto& e : ra.entries) CHECK(*e.record->rho == Rational(1));
    CHECK(ra.summary.rho_monotonicity == "not-monotone");  // constant, not strict
}

TEST_CASE("scan records an infinite-mu instantiation as failed and continues") {
    FamilyTemplate t;
    t.text = "x^m*y^m";  // non-reduced for every m >= 2
    t.lo = 2;
    t.hi = 3;
    ScanResult r = scan_family(t);
    REQUIRE(r.entries.size() == 2);
    for (const auto& e : r.entries) {
        CHECK(!e.has_record());
        CHECK(!e.error.empty());
    }
}

TEST_CASE("search determinism: identical config gives byte-identical files") {
    SearchConfig cfg;
    cfg.supports = {{"x^3", "y^4", "x^2*y^2"}, {"x^2", "y^3"}};
    cfg.samples = 10;
    cfg.seed = 12345;
    cfg.threads = 4;
    std::string p1 = temp_path("det1"), p2 = temp_path("det2");
    std::remove(p1.c_str());
    std::remove(p2.c_str());
    ScanResult r1 = search_support(cfg, p1);
    ScanResult r2 = search_support(cfg, p2);
    CHECK(slurp(p1) == slurp(p2));
    CHECK(r1.entries.size() == 10);
    for (const auto& e : r1.entries)
        if (e.has_record()) CHECK(e.record_json.at("checks").size() >= 8);
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("search resumes from a truncated file to the same bytes") {
    SearchConfig cfg;
    cfg.supports = {{"x^3", "y^4", "x^2*y^2"}};
    cfg.samples = 6;
    cfg.seed = 99;
    cfg.threads = 2;
    std::string full = temp_path("full"), part = temp_path("part");
    std::remove(full.c_str());
    std::remove(part.c_str());
    search_support(cfg, full);
    // keep the header plus the first three samples, then resume
    {
        std::istringstream in(slurp(full));
        std::ofstream out(part);
        std::string line;
        for (int i = 0; i < 4 && std::getline(in, line); ++i) out << line << "\n";
    }
    ScanResult resumed = search_support(cfg, part);
    CHECK(slurp(part) == slurp(full));
    CHECK(resumed.entries.size() == 6);
    // a different seed must be rejected
    SearchConfig other = cfg;
    other.seed = 100;
    CHECK_THROWS_AS(search_support(other, part), DomainError);
    std::remove(full.c_str());
    std::remove(part.c_str());
}

TEST_CASE("single-sample searches reproduce known germs") {
    SearchConfig cfg;
    cfg.supports = {{"x^5", "x^2*y^3", "y^4"}};
    cfg.coefficients = {1};
    cfg.samples = 1;
    cfg.seed = 5;
    std::string p = temp_path("single");
    std::remove(p.c_str());
    ScanResult r = search_support(cfg, p);
    REQUIRE(r.entries.size() == 1);
    REQUIRE(r.entries[0].has_record());
    CHECK(r.entries[0].record->mu == 12);
    CHECK(*r.entries[0].record->rho == Rational(1));
    std::remove(p.c_str());
}

TEST_CASE("a record with rho >= 2 aborts as an internal violation") {
    ScanEntry forged;
    forged.id = "s0";
    forged.input = "forged";
    forged.record_json = nlohmann::ordered_json{
        {"rho", {{"num", "5"}, {"den", "2"}}},
        {"checks", nlohmann::ordered_json::array()}};
    CHECK_THROWS_AS(summarize({forged}), InternalError);
}

TEST_CASE("verify: bundled subset, wrong golden, empty corpus") {
    nlohmann::ordered_json subset = nlohmann::ordered_json::array();
    for (const auto& item : corpus_to_json()) {
        if (item.at("expect").at("mu").get<std::uint64_t>() <= 16) subset.push_back(item);
    }
    VerifyReport ok = verify_corpus_items(subset);
    CHECK(ok.all_pass);
    CHECK(ok.items >= 13);

    nlohmann::ordered_json bad = nlohmann::ordered_json::array();
    bad.push_back({{"name", "broken-cusp"},
                   {"poly", "y^2 - x^3"},
                   {"expect", {{"tau", 3}}}});
    VerifyReport fail = verify_corpus_items(bad);
    CHECK(!fail.all_pass);
    REQUIRE(fail.rows.size() == 1);
    CHECK(fail.rows[0].name == "broken-cusp");
    CHECK(fail.rows[0].detail.find("tau") != std::string::npos);

    VerifyReport empty = verify_corpus_items(nlohmann::ordered_json::array());
    CHECK(empty.all_pass);
    CHECK(empty.items == 0);
}
