#include <map>

#include "recorder.hpp"

namespace efgc {

using namespace checks;

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"residue", "duality", "divisor",       "vn",
                                                 "transfer", "mackey", "counterexample"};
  return names;
}

std::vector<PropertyResult> run_criterion(int id, const SuiteOptions& opt) {
  std::vector<PropertyResult> out;
  static const char* suite_of[] = {"", "transfer", "transfer", "vn", "residue", "duality", "divisor",
                                   "divisor", "divisor", "counterexample", "mackey", "transfer"};
  if (id < 1 || id > 11) throw Error(ErrorKind::kParseError, "no criterion " + std::to_string(id));
  Recorder rec(suite_of[id], out);
  switch (id) {
    case 1: k_theory_checks(rec, opt); break;
    case 2: transfer_theorem_checks(rec, opt); break;
    case 3: vn_checks(rec, opt); break;
    case 4: residue_checks(rec, opt); break;
    case 5: duality_checks(rec, opt); break;
    case 6: divisor_norm_checks(rec, opt); break;
    case 7: points_scheme_checks(rec, opt); break;
    case 8: moment_checks(rec, opt); break;
    case 9: counterexample_checks(rec, opt); break;
    case 10: mackey_checks(rec, opt); break;
    case 11: idempotent_checks(rec, opt); break;
  }
  return out;
}

std::vector<PropertyResult> run_suite(const std::string& suite, const SuiteOptions& opt) {
  static const std::map<std::string, std::vector<int>> criteria = {
      {"residue", {4}}, {"duality", {5}}, {"divisor", {6, 7, 8}}, {"vn", {3}},
      {"transfer", {1, 2, 11}}, {"mackey", {10}}, {"counterexample", {9}}};
  std::vector<PropertyResult> out;
  if (suite == "all") {
    for (const auto& s : suite_names()) {
      auto part = run_suite(s, opt);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  auto it = criteria.find(suite);
  if (it == criteria.end()) throw Error(ErrorKind::kParseError, "unknown suite " + suite);
  for (int id : it->second) {
    auto part = run_criterion(id, opt);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace efgc
