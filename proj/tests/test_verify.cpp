#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "weylbraid/errors.hpp"
#include "weylbraid/verify.hpp"

using namespace weylbraid;

namespace {

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

}  // namespace

TEST_CASE("suite registry") {
  const std::vector<std::string> expected{
      "relations", "folding", "fixed-subgroups", "lattice",
      "bfield",    "census",  "kodaira",         "garside-oracle"};
  CHECK(suite_names() == expected);
  CHECK_THROWS_AS(run_suite("weyl"), InvalidArgumentError);
  CHECK_THROWS_AS(run_suite(""), InvalidArgumentError);
}

TEST_CASE("table-driven suites pass") {
  for (const std::string name : {"folding", "kodaira", "census", "relations"}) {
    const SuiteReport rep = run_suite(name);
    CHECK(rep.suite == name);
    CHECK(rep.all_passed);
    CHECK(!rep.checks.empty());
  }
}

TEST_CASE("group-theoretic suites pass") {
  CHECK(all_passed(check_weyl_orders()));
  CHECK(run_suite("fixed-subgroups").all_passed);
}

TEST_CASE("lattice-side suites pass") {
  CHECK(run_suite("lattice").all_passed);
  CHECK(all_passed(check_bfield_criterion(200)));
  CHECK(all_passed(check_twist_parity(200)));
}

TEST_CASE("garside oracle agrees with the normal form") {
  const std::vector<CheckResult> checks = check_garside_oracle(300);
  REQUIRE(checks.size() == 4);
  for (const CheckResult& c : checks) {
    INFO(c.name << ": " << c.note);
    CHECK(c.passed);
  }
  // the exhaustive banks compare every pair of short positive words
  CHECK(checks[0].note == "16129 pairs");
  CHECK(checks[1].note == "16129 pairs");
}

TEST_CASE("suite reports serialize") {
  const SuiteReport rep = run_suite("kodaira");
  const nlohmann::json j = rep;
  CHECK(j["suite"] == "kodaira");
  CHECK(j["all_passed"] == true);
  CHECK(j["checks"].is_array());
  CHECK(j["checks"].size() == rep.checks.size());
  CHECK(j["checks"][0].contains("name"));
  CHECK(j["checks"][0]["passed"] == true);
}
