#pragma once

#include <string>
#include <vector>

namespace qpq {
namespace verify {

struct Options {
  long sweep_cmax = 20;
  long sweep_pmax = 11;
  long kmax = 100;
  bool parallel = true;
};

struct CriterionResult {
  int id;
  std::string name;
  std::string status;  // PASS, WARN or FAIL
  std::string detail;
  double seconds = 0.0;
};

/// Run every acceptance criterion. Criterion 9 (determinism) re-runs the
/// suite and compares the serialized reports byte for byte.
std::vector<CriterionResult> run_all(const Options& opts);

/// Stable JSON rendering of the results; carries no timing data, so repeated
/// runs on identical inputs are byte-identical.
std::string to_json(const std::vector<CriterionResult>& results);

std::string to_table(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);  // WARN counts as pass

}  // namespace verify
}  // namespace qpq
