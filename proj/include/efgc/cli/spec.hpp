#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

#include "efgc/multicurve/efg.hpp"

namespace efgc {

// A model spec file, TOML or its JSON mirror:
//
//   name = "..."            optional
//   truncation = N
//   [group]   factors = [2, 2]
//   [base]    ring = "Z"    ring descriptor, "[A*]" allowed
//   [model]   kind = multiplicative_universal | multiplicative |
//                    product_over_field | additive | counterexample | explicit
//             phi / points   values per character, as a list in element
//                            order or a table keyed by labels like "1,0"
//             f, iota        polynomials in x (explicit only)
//             sigma          polynomial in x0, x1; overrides the law of a builtin
//             norm_unit      optional (explicit only)
//   [options] work_precision = extra truncation added to N
//
// Values are integers or expression strings. Unknown keys are rejected.
struct ModelSpec {
  nlohmann::json tree;
  std::string source;
  std::string digest;  // FNV-1a 64 of the canonical JSON dump, in hex
};

ModelSpec parse_spec_text(const std::string& text, bool json, const std::string& source);
// JSON when the path ends in .json, TOML otherwise. Throws ParseError.
ModelSpec load_spec(const std::string& path);

std::string fnv1a_hex(const std::string& bytes);

struct LoadedModel {
  std::optional<EFG> efg;
  ValidationReport report;
  // Set when a builder refused the data; report is then empty.
  std::string build_error;
  int truncation = 0;
  int work_precision = 0;
  bool valid() const { return efg && build_error.empty() && report.all_pass(); }
};

// work_precision comes from the override, else EFGC_WORK_PRECISION, else [options].
LoadedModel build_model(const ModelSpec& spec, std::optional<int> work_precision = std::nullopt);
std::optional<int> env_work_precision();

}  // namespace efgc
