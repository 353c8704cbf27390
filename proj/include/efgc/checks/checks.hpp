#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace efgc {

struct PropertyResult {
  std::string suite;
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;
  bool pass() const { return cases > 0 && failures == 0; }
};

struct SuiteOptions {
  std::uint64_t seed = 20260101;
  long residue_instances = 1000;
  long duality_instances = 200;
  int vn_max = 6;
  int coordinate_changes = 50;
  int divisor_trials = 30;
  int counterexample_K = 4;
  int counterexample_N = 17;
  // Extra truncation added to the confirming counterexample run.
  int work_precision = 0;
};

// residue, duality, divisor, vn, transfer, mackey, counterexample.
const std::vector<std::string>& suite_names();
// "all" runs every suite in order.
std::vector<PropertyResult> run_suite(const std::string& suite, const SuiteOptions& opt);
// The property groups behind acceptance criteria 1 to 11.
std::vector<PropertyResult> run_criterion(int id, const SuiteOptions& opt);

}  // namespace efgc
