#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace laverkit {

struct CheckResult {
  std::string id;      // stable identifier, e.g. "1a-copy-step"
  bool pass;
  std::string detail;  // empty when passing; what diverged otherwise
};

// Runs the complete end-to-end check suite (worked-figure regressions,
// canonical-pattern laws, sequence coding round-trips, estimator values,
// hierarchy comparisons, table arithmetic, rendering, fault injection).
std::vector<CheckResult> run_verify();

// Prints one "PASS <id>" / "FAIL <id>: <detail>" line per check plus a
// summary; returns the number of failures.
int report_verify(std::ostream& out);

}  // namespace laverkit
