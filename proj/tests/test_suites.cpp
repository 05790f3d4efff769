#include "z2sl/suites.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace z2sl;

TEST_CASE("report schema") {
  SuiteOptions opt;
  auto r = run_suites("rep", opt);
  REQUIRE(r.size() == 1);
  auto j = nlohmann::json::parse(report_json(r, false));
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["status"] == "pass");
  CHECK(j["suites"][0]["suite"] == "rep");
  CHECK(j["suites"][0]["checks"].size() == r[0].checks.size());
  CHECK_FALSE(j["suites"][0].contains("wall_ms"));
  CHECK(nlohmann::json::parse(report_json(r, true))["suites"][0].contains("wall_ms"));
}

TEST_CASE("reports are deterministic") {
  SuiteOptions opt;
  opt.backlund = BacklundVariant::Auto;
  CHECK(report_json(run_suites("backlund", opt), false) == report_json(run_suites("backlund", opt), false));
  CHECK(report_text(run_suites("solution", opt), false) == report_text(run_suites("solution", opt), false));
}

TEST_CASE("suite selection") {
  SuiteOptions opt;
  CHECK(run_suites("backlund", opt).size() == 2);
  opt.lax = LaxVariant::Alternative;
  auto lax = run_suites("lax", opt);
  REQUIRE(lax.size() == 1);
  CHECK(lax[0].params.at(0).second == "alternative");
  CHECK_THROWS_AS(run_suites("nosuch", opt), std::invalid_argument);
}

TEST_CASE("failing checks carry residuals") {
  auto r = run_soldering();
  CHECK_FALSE(r.ok());
  for (const auto& c : r.checks)
    if (!c.pass) CHECK_FALSE(c.residual.empty());
  auto j = nlohmann::json::parse(report_json({r}, false));
  CHECK(j["status"] == "fail");
}
