#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace conelab {

// One numbered acceptance check with a one-line outcome: either the
// supporting facts on success or the first failure encountered.
struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

struct AcceptanceSummary {
  std::uint64_t seed = 0;
  std::string data_dir;
  std::vector<CriterionResult> criteria;

  bool all_passed() const;
};

// Runs the full acceptance battery.  Deterministic given the seed (used for
// the randomized property parts) and the catalog data directory; exceptions
// inside a criterion mark it failed instead of aborting the run.
AcceptanceSummary run_acceptance_suite(std::uint64_t seed);

std::string render_summary_text(const AcceptanceSummary& s);

}  // namespace conelab
