#include <doctest.h>

#include <braidcong/verify.hpp>
#include <algorithm>
#include <set>

using namespace braidcong;

TEST_CASE("claim registry") {
  auto claims = registered_claims();
  CHECK(claims.size() == 13);
  std::set<std::string> ids;
  for (auto const& c : claims) {
    ids.insert(c.id);
    CHECK_FALSE(c.statement.empty());
  }
  CHECK(ids.size() == claims.size());
  CHECK(std::is_sorted(claims.begin(), claims.end(), [](auto const& a, auto const& b) { return a.id < b.id; }));
}

TEST_CASE("filtering selects single claims") {
  SuiteConfig config;
  config.claims = {"generator-powers"};
  auto report = run_suite(config);
  REQUIRE(report.claims.size() == 1);
  CHECK(report.claims[0].id == "c01-generator-powers");
  CHECK(report.claims[0].status == ClaimStatus::pass);
  CHECK(report.ok());

  config.claims = {"c05", "c13-transvection-model"};
  report = run_suite(config);
  REQUIRE(report.claims.size() == 2);
  CHECK(report.claims[0].id == "c05-torelli-chains");
  CHECK(report.claims[1].id == "c13-transvection-model");

  config.claims = {"no-such-claim"};
  CHECK_THROWS_AS(run_suite(config), std::invalid_argument);
}

TEST_CASE("reports are deterministic apart from timing") {
  SuiteConfig config;
  config.claims = {"c03", "c12"};
  config.seed = 99;
  auto a = run_suite(config).to_json(false);
  auto b = run_suite(config).to_json(false);
  CHECK(a == b);
  CHECK(a.find("timing") == std::string::npos);
  CHECK(a.find("\"seed\": 99") != std::string::npos);
  CHECK(run_suite(config).to_json(true).find("\"timing\"") != std::string::npos);

  // A claim's samples do not depend on which other claims run.
  SuiteConfig alone = config;
  alone.claims = {"c12"};
  CHECK(run_suite(alone).claims[0].computed == run_suite(config).claims[1].computed);
}

TEST_CASE("caps mark claims as skipped") {
  SuiteConfig config;
  config.claims = {"c06", "c07"};
  config.element_cap = 20;
  auto report = run_suite(config);
  for (auto const& c : report.claims) {
    CHECK(c.status == ClaimStatus::skipped);
    CHECK(c.note.find("cap exceeded") != std::string::npos);
  }
  CHECK(report.ok());
  CHECK(report.to_table().find("skipped") != std::string::npos);
}

TEST_CASE("failed claims carry both values") {
  SuiteConfig config;
  config.claims = {"c10"};
  auto report = run_suite(config);
  REQUIRE(report.claims.size() == 1);
  auto const& c = report.claims[0];
  CHECK_FALSE(c.computed.empty());
  CHECK_FALSE(c.expected.empty());
  if (c.status == ClaimStatus::fail) CHECK_FALSE(c.note.empty());
}
