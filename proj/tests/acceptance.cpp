#include <cstdio>

#include "conelab/repro.hpp"

// Acceptance gate: run the full battery and print one pass/fail line per
// criterion.  Exit status 0 only if every criterion passes.
int main() {
  conelab::AcceptanceSummary summary = conelab::run_acceptance_suite(1729);
  std::fputs(conelab::render_summary_text(summary).c_str(), stdout);
  return summary.all_passed() ? 0 : 1;
}
