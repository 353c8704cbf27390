#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "efgc/checks/checks.hpp"
#include "efgc/error.hpp"
#include "efgc/ringkit/poly.hpp"

namespace efgc::checks {

using Rng = std::mt19937_64;

class Recorder {
 public:
  Recorder(std::string suite, std::vector<PropertyResult>& out) : suite_(std::move(suite)), out_(out) {}

  void record(const std::string& name, bool ok, const std::string& detail = "");
  // Runs body; an Error counts as a failed case.
  void run(const std::string& name, const std::function<bool()>& body, const std::string& detail = "");

 private:
  PropertyResult& slot(const std::string& name);
  std::string suite_;
  std::vector<PropertyResult>& out_;
};

long uniform(Rng& rng, long lo, long hi);
RingValue random_value(const Ring& ring, Rng& rng, long bound = 4);
Poly random_poly(const Ring& ring, int degree, Rng& rng, bool monic = false);
// Z, Q, F5, Z/6, Z[v]/(v^2 - 1).
std::vector<Ring> residue_menu();

void residue_checks(Recorder& rec, const SuiteOptions& opt);
void duality_checks(Recorder& rec, const SuiteOptions& opt);
void vn_checks(Recorder& rec, const SuiteOptions& opt);
void k_theory_checks(Recorder& rec, const SuiteOptions& opt);
void transfer_theorem_checks(Recorder& rec, const SuiteOptions& opt);
void divisor_norm_checks(Recorder& rec, const SuiteOptions& opt);
void points_scheme_checks(Recorder& rec, const SuiteOptions& opt);
void moment_checks(Recorder& rec, const SuiteOptions& opt);
void counterexample_checks(Recorder& rec, const SuiteOptions& opt);
void mackey_checks(Recorder& rec, const SuiteOptions& opt);
void idempotent_checks(Recorder& rec, const SuiteOptions& opt);

}  // namespace efgc::checks
