#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "efgc/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with equivariant formal groups on embeddable multicurves."};
  app.name("efgc");
  std::string command;
  std::string spec;
  std::string out = "json";
  efgc::CommandOptions opt;
  std::string expr, num, den, ring;

  app.add_option("command", command, "validate|vn|transfer|mackey|divisor|residue|duality|moments|selftest")
      ->required()
      ->check(CLI::IsMember(efgc::command_names()));
  app.add_option("spec", spec, "model spec (.toml, or .json mirror)");
  app.add_option("--out", out, "output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--max-n", opt.max_n, "largest |n| in the v_n table");
  app.add_flag("--negative", opt.negative, "include negative n");
  auto* expr_opt = app.add_option("--expr", expr, "divisor expression");
  auto* num_opt = app.add_option("--num", num, "numerator polynomial in x");
  auto* den_opt = app.add_option("--den", den, "monic denominator polynomial in x");
  auto* ring_opt = app.add_option("--ring", ring, "ring descriptor");
  app.add_option("--suite", opt.suite, "selftest suite name or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (*expr_opt) opt.expr = expr;
  if (*num_opt) opt.num = num;
  if (*den_opt) opt.den = den;
  if (*ring_opt) opt.ring = ring;

  std::optional<std::string> spec_path;
  if (!spec.empty()) spec_path = spec;
  efgc::CommandOutput result = efgc::run_command(command, spec_path, opt);
  std::cout << efgc::render(result.doc, out);
  const auto& res = result.doc["results"];
  if (res.contains("error")) std::cerr << "efgc: " << res["error"]["message"].get<std::string>() << "\n";
  return result.exit_code;
}
