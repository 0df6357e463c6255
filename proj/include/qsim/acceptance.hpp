// End-to-end verification: every reproduction target is checked at a
// pinned tolerance and reported as one PASS/FAIL line.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsim {

struct CriterionResult {
  int id;
  std::string label;
  bool passed;
  std::string detail;
};

/// Runs all criteria in order, streaming progress and failure tables to
/// `log`. Never throws for a failed criterion; only infrastructure errors
/// propagate.
std::vector<CriterionResult> run_acceptance_suite(std::ostream& log);

/// Runs the suite, prints the summary table, returns 0 if everything
/// passed and 1 otherwise.
int run_acceptance_and_report(std::ostream& out);

}  // namespace qsim
