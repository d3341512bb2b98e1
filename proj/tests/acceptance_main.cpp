// Acceptance gate: ten go/no-go checks, one line each, nonzero exit on
// any failure.  Each criterion bundles a check bank from the library's
// verification module with a wall-clock limit pinned here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "weylbraid/verify.hpp"

namespace {

using weylbraid::CheckResult;

struct Criterion {
  int number;
  std::string title;
  long long limit_ms;
  std::function<std::vector<CheckResult>()> bank;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "diagram folding table", 1000, [] { return weylbraid::check_folding_table(); }},
      {2, "Weyl group orders by enumeration", 10000,
       [] { return weylbraid::check_weyl_orders(); }},
      {3, "braid relation sweep (rank <= 4 and affine)", 30000,
       [] { return weylbraid::check_relations_sweep(); }},
      {4, "Garside normal form vs rewriting oracle", 120000,
       [] { return weylbraid::check_garside_oracle(10000); }},
      {5, "symmetric subgroups of braid and Weyl groups", 60000,
       [] { return weylbraid::check_symmetric_subgroups(); }},
      {6, "lattice reflection suite", 5000,
       [] { return weylbraid::check_lattice_reflections(); }},
      {7, "background field criterion", 5000,
       [] { return weylbraid::check_bfield_criterion(1000); }},
      {8, "spherical twist parity", 5000,
       [] { return weylbraid::check_twist_parity(1000); }},
      {9, "deformation model census", 1000,
       [] { return weylbraid::check_census_model(); }},
      {10, "degenerate fibre table", 1000,
       [] { return weylbraid::check_kodaira_table(); }},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckResult> checks;
    std::string blowup;
    try {
      checks = c.bank();
    } catch (const std::exception& e) {
      blowup = e.what();
    }
    const long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();

    int failed_checks = blowup.empty() ? 0 : 1;
    for (const CheckResult& r : checks)
      if (!r.passed) ++failed_checks;
    const bool in_time = ms <= c.limit_ms;
    const bool pass = failed_checks == 0 && in_time;
    if (!pass) ++failures;

    std::printf("%s  %2d  %-48s  %5lld ms (limit %lld ms), %zu checks\n",
                pass ? "PASS" : "FAIL", c.number, c.title.c_str(), ms,
                c.limit_ms, checks.size());
    if (!blowup.empty()) std::printf("      unexpected error: %s\n", blowup.c_str());
    for (const CheckResult& r : checks)
      if (!r.passed)
        std::printf("      failed: %s%s%s\n", r.name.c_str(),
                    r.note.empty() ? "" : " -- ", r.note.c_str());
    if (!in_time && failed_checks == 0)
      std::printf("      over the time limit\n");
  }

  if (failures > 0) std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
