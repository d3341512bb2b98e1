#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace weylbraid {

// One verified property with a stable name; `note` carries the measured
// value (an order, a pair count, a mismatch total) for the report.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_passed = true;
};

void to_json(nlohmann::json& j, const CheckResult& c);
void to_json(nlohmann::json& j, const SuiteReport& r);

// Registered suite names, in canonical report order.
const std::vector<std::string>& suite_names();

// Runs one named suite; unknown names are an input error.
SuiteReport run_suite(const std::string& name);

// The individual check banks behind the suites.  Each is deterministic;
// the randomized banks use fixed seeds.
std::vector<CheckResult> check_folding_table();
std::vector<CheckResult> check_weyl_orders();
std::vector<CheckResult> check_relations_sweep();
std::vector<CheckResult> check_garside_oracle(int random_trials = 10000);
std::vector<CheckResult> check_symmetric_subgroups();
std::vector<CheckResult> check_lattice_reflections();
std::vector<CheckResult> check_bfield_criterion(int trials = 1000);
std::vector<CheckResult> check_twist_parity(int trials = 1000);
std::vector<CheckResult> check_census_model();
std::vector<CheckResult> check_kodaira_table();

}  // namespace weylbraid
