#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace efgc {

struct CommandOptions {
  int max_n = 4;
  bool negative = false;
  std::optional<std::string> expr;
  std::optional<std::string> num;
  std::optional<std::string> den;
  std::optional<std::string> ring;
  std::string suite = "all";
};

// Exit codes: 0 success, 1 failed validation or property or a library
// error, 2 parse errors and bad flags.
struct CommandOutput {
  nlohmann::ordered_json doc;
  int exit_code = 0;
};

const std::vector<std::string>& command_names();

// Never throws: errors become an "error" payload and an exit code.
CommandOutput run_command(const std::string& command, const std::optional<std::string>& spec_path,
                          const CommandOptions& opt);

// format is json, csv or pretty.
std::string render(const nlohmann::ordered_json& doc, const std::string& format);

}  // namespace efgc
