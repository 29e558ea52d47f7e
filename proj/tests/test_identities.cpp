#include "doctest.h"

#include "hookcontent/identities.hpp"
#include "hookcontent/suite.hpp"

#include "json.hpp"

#include <sstream>

using namespace hookcontent;

namespace {

IdentityCheck make(const std::string& name, int n_min, int n_max) {
    auto check = default_check(name);
    check.n_min = n_min;
    check.n_max = n_max;
    return check;
}

const IdentityRow& row_at(const IdentityReport& report, int n) {
    for (const auto& row : report.rows)
        if (row.n == n) return row;
    throw std::out_of_range("no row");
}

}  // namespace

TEST_CASE("registry") {
    CHECK(identity_names().size() == 7);
    CHECK(is_registered_identity("k2-skew"));
    CHECK_FALSE(is_registered_identity("k3-skew"));
    CHECK_THROWS_AS(default_check("nope"), IdentityError);
    IdentityCheck bad;
    bad.name = "nope";
    CHECK_THROWS_AS(run_identity(bad), IdentityError);
    auto reversed = make("normalization", 5, 2);
    CHECK_THROWS_AS(run_identity(reversed), IdentityError);
}

TEST_CASE("normalization at n = 3") {
    const auto report = run_identity(make("normalization", 3, 3));
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].lhs == 6);
    CHECK(report.rows[0].rhs == 6);
    CHECK(report.pass);
}

TEST_CASE("content-binomial examples") {
    auto check = make("content-binomial", 0, 6);
    check.k = 1;
    const auto report = run_identity(check);
    CHECK(report.pass);
    CHECK(row_at(report, 2).lhs == 1);
    CHECK(row_at(report, 2).rhs == 1);
    for (int k = 0; k <= 4; ++k) {
        auto c = make("content-binomial", k, k);
        c.k = k;
        const auto r = run_identity(c);
        CHECK(r.rows[0].lhs == 0);
        CHECK(r.rows[0].lhs == r.rows[0].rhs);
    }
}

TEST_CASE("k1-skew with empty mu is binom(n,2)") {
    const auto report = run_identity(make("k1-skew", 0, 9));
    CHECK(report.pass);
    for (const auto& row : report.rows) CHECK(row.rhs == Rational(binom(row.n, 2)));
}

TEST_CASE("skew identities for a nontrivial mu") {
    for (const char* name : {"skew-hook", "k1-skew", "k2-skew"}) {
        auto check = make(name, 0, 7);
        check.mu = {3, 1};
        CHECK(run_identity(check).pass);
    }
}

TEST_CASE("poly-detect certifies and predicts the holdout") {
    auto check = make("poly-detect", 0, 10);
    check.exponents = {1, 1};
    check.nu = Partition{1};
    check.mu = {2, 1};
    const auto report = run_identity(check);
    REQUIRE(report.fit);
    CHECK(report.fit->is_polynomial());
    CHECK(report.rows.back().n == 11);
    CHECK(report.pass);

    auto tiny = make("poly-detect", 0, 1);
    CHECK_THROWS_AS(run_identity(tiny), IdentityError);
}

TEST_CASE("partial-fraction identity") {
    auto check = make("partial-fraction", 0, 9);
    check.k = 4;
    check.seed = 99;
    CHECK(run_identity(check).pass);
}

TEST_CASE("json report shape") {
    auto check = make("k1-skew", 0, 2);
    check.mu = {3, 1};
    const auto text = to_json(run_identity(check));
    const auto j = nlohmann::json::parse(text);
    CHECK(j["identity"] == "k1-skew");
    CHECK(j["params"]["mu"] == "3,1");
    CHECK(j["params"]["n"] == "0..2");
    REQUIRE(j["rows"].size() == 3);
    CHECK(j["rows"][1]["n"] == 1);
    CHECK(j["rows"][1]["lhs"].is_string());
    CHECK(j["pass"] == true);
    CHECK(text.find('\n') == std::string::npos);

    const auto skew = to_json(run_identity(make("skew-hook", 0, 1)));
    CHECK(nlohmann::json::parse(skew)["rows"][0]["lhs"] == "1");
}

TEST_CASE("rationals are serialized as p/q strings") {
    auto check = make("skew-hook", 0, 2);
    check.mu = {2, 1};
    const auto j = nlohmann::json::parse(to_json(run_identity(check)));
    CHECK(j["rows"][2]["lhs"] == "1/6");
    CHECK(to_csv(run_identity(check)).find("1/6") != std::string::npos);
}

TEST_CASE("suite config parsing") {
    std::istringstream in(R"(# demo
seed = 7
n_max = 3
identity = k1-skew mu=3,1 n=0..9   # trailing comment
identity = partial-fraction k=3 n=0..4
identity = poly-detect r=2 nu=1 mu=2,1 n=0..12
)");
    const auto config = parse_suite_config(in);
    CHECK(config.seed == 7);
    REQUIRE(config.n_max);
    CHECK(*config.n_max == 3);
    REQUIRE(config.checks.size() == 3);
    CHECK(config.checks[0].mu == StrictPartition{3, 1});
    CHECK(config.checks[1].seed == 7);
    CHECK(config.checks[2].exponents == std::vector<int>{2});
    const auto checks = resolve_checks(config);
    CHECK(checks[0].n_max == 3);
    CHECK(checks[1].n_max == 3);
    CHECK(checks[2].n_max == 12);
}

TEST_CASE("config errors carry line numbers") {
    auto error_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            parse_suite_config(in);
        } catch (const ConfigError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(error_of("seed = 1\nidentity = bogus n=0..2\n").rfind("line 2:", 0) == 0);
    CHECK(error_of("\n\nfoo = 1\n").rfind("line 3:", 0) == 0);
    CHECK(error_of("identity = k1-skew k=2\n").find("does not take") != std::string::npos);
    CHECK(error_of("identity = k1-skew mu=1,2\n").rfind("line 1:", 0) == 0);
    CHECK(error_of("n_max = x\n").rfind("line 1:", 0) == 0);
    CHECK(error_of("just words\n").rfind("line 1:", 0) == 0);
    CHECK_THROWS_AS(load_suite_config("/nonexistent/suite.cfg"), ConfigError);
}

TEST_CASE("n_max = 0 gives trivial passes") {
    std::istringstream in("n_max = 0\n");
    const auto result = run_suite(parse_suite_config(in));
    CHECK(result.exit_code == 0);
    for (const auto& report : result.reports) {
        CHECK(report.pass);
        if (report.check.name != "poly-detect") CHECK(report.rows.size() == 1);
    }
}

TEST_CASE("suite reruns are byte-identical, serial or parallel") {
    std::istringstream a("seed = 11\nidentity = partial-fraction k=5 n=0..6\nidentity = k2-skew mu=4,2,1 n=0..5\n");
    auto config = parse_suite_config(a);
    const auto first = render(run_suite(config).reports, ReportFormat::Json);
    config.jobs = 2;
    const auto second = render(run_suite(config).reports, ReportFormat::Json);
    CHECK(first == second);
    CHECK(render(run_suite(config).reports, ReportFormat::Text) ==
          render(run_suite(config).reports, ReportFormat::Text));
}

TEST_CASE("range parsing") {
    CHECK(parse_range("0..12") == std::pair{0, 12});
    CHECK(parse_range("5") == std::pair{5, 5});
    CHECK_THROWS_AS(parse_range("a..3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_range("1..x"), std::invalid_argument);
}
