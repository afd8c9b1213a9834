#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "heis/error.hpp"
#include "heis/verify.hpp"

#include <cmath>
#include <limits>

#include "json.hpp"

using namespace heis;

TEST_CASE("evaluate")
{
    Check c;
    c.measured = 1.05;
    c.expected = 1.0;
    c.tolerance = 0.1;
    c.compare = Compare::Absolute;
    CHECK(evaluate(c));
    c.tolerance = 0.01;
    CHECK_FALSE(evaluate(c));
    c.compare = Compare::Relative;
    c.expected = 100.0;
    c.measured = 100.5;
    CHECK(evaluate(c));
    c.measured = 102.0;
    CHECK_FALSE(evaluate(c));
    c.compare = Compare::Below;
    c.measured = 0.001;
    CHECK(evaluate(c));
    c.measured = 0.02;
    CHECK_FALSE(evaluate(c));
    c.compare = Compare::Above;
    CHECK(evaluate(c));
    c.measured = std::numeric_limits<double>::quiet_NaN();
    for (Compare m : {Compare::Absolute, Compare::Relative, Compare::Below, Compare::Above}) {
        c.compare = m;
        CHECK_FALSE(evaluate(c));
    }
}

TEST_CASE("tolerances")
{
    const auto& d = default_tolerances();
    for (const char* name : {"geodesic", "pole", "jacobi", "curvature", "area", "volume", "iso", "orthogonality"}) {
        CHECK(d.count(name) == 1);
    }
    for (const auto& [name, v] : d) CHECK(v > 0.0);
    VerifyConfig cfg;
    CHECK(cfg.tolerance("area") == d.at("area"));
    cfg.tol["area"] = 0.5;
    CHECK(cfg.tolerance("area") == 0.5);
    CHECK_THROWS(cfg.tolerance("no-such-tolerance"));
}

TEST_CASE("suites")
{
    const auto names = suite_names();
    CHECK(names.size() == 6);
    CHECK_THROWS_AS(run_suite("nosuch", VerifyConfig{}), GeometryError);

    VerifyConfig cfg;
    cfg.samples = 20;
    const std::vector<Check> geo = run_suite("geodesics", cfg);
    CHECK(geo.size() >= 5);
    CHECK(all_passed(geo));
    for (const Check& c : geo) {
        CHECK(c.suite == "geodesics");
        CHECK((c.basis == "reference" || c.basis == "derived" || c.basis == "identity"));
    }

    cfg.tol["pole"] = 1e-30;
    CHECK_FALSE(all_passed(run_suite("geodesics", cfg)));
}

TEST_CASE("bernstein suite flags the non-stationary graph")
{
    VerifyConfig cfg;
    cfg.samples = 20;
    const std::vector<Check> b = run_suite("bernstein", cfg);
    CHECK(all_passed(b));
    bool flagged = false;
    for (const Check& c : b) flagged = flagged || (c.note == "NOT-stationary" && c.measured == doctest::Approx(-1.0));
    CHECK(flagged);

    cfg.g = "0.3*y - 1";
    for (const Check& c : run_suite("bernstein", cfg)) {
        if (c.note == "NOT-stationary") CHECK(c.name.find("y^3") != std::string::npos);
    }
}

TEST_CASE("reports")
{
    VerifyConfig cfg;
    cfg.samples = 10;
    std::vector<Check> checks = run_suite("iso", cfg);
    REQUIRE(checks.size() == 3);
    const std::string text = format_report_text(checks);
    CHECK(text.rfind("PASS iso/", 0) == 0);
    CHECK(text.find("all 3/3 checks passed") != std::string::npos);

    checks.front().pass = false;
    CHECK(format_report_text(checks).find("2/3 checks passed") != std::string::npos);
    checks.front().measured = std::numeric_limits<double>::infinity();
    const auto j = nlohmann::json::parse(format_report_json(checks));
    CHECK(j["passed"] == false);
    CHECK(j["checks"].size() == 3);
    CHECK(j["checks"][0]["measured"].is_null());
    CHECK(j["checks"][1]["pass"] == true);
}
