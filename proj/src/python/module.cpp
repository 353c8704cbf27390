#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "efgc/cli/commands.hpp"
#include "efgc/cli/parse.hpp"
#include "efgc/resdual/resdual.hpp"

namespace py = pybind11;

namespace {

py::tuple run(const std::string& command, std::optional<std::string> spec, int max_n, bool negative,
              std::optional<std::string> expr, std::optional<std::string> num, std::optional<std::string> den,
              std::optional<std::string> ring, const std::string& suite) {
  efgc::CommandOptions opt;
  opt.max_n = max_n;
  opt.negative = negative;
  opt.expr = std::move(expr);
  opt.num = std::move(num);
  opt.den = std::move(den);
  opt.ring = std::move(ring);
  opt.suite = suite;
  efgc::CommandOutput out;
  {
    py::gil_scoped_release release;
    out = efgc::run_command(command, spec, opt);
  }
  return py::make_tuple(out.doc.dump(), out.exit_code);
}

std::string residue(const std::string& num, const std::string& den, const std::string& ring) {
  efgc::Ring k = efgc::parse_ring(ring);
  return efgc::residue(efgc::parse_poly(num, k), efgc::parse_poly(den, k)).to_string();
}

}  // namespace

PYBIND11_MODULE(_efgc, m) {
  m.doc() = "Bindings for the efgc command layer.";
  py::register_exception<efgc::Error>(m, "EfgcError", PyExc_ValueError);
  m.def("commands", &efgc::command_names);
  m.def("run", &run, py::arg("command"), py::arg("spec") = std::nullopt, py::arg("max_n") = 4,
        py::arg("negative") = false, py::arg("expr") = std::nullopt, py::arg("num") = std::nullopt,
        py::arg("den") = std::nullopt, py::arg("ring") = std::nullopt, py::arg("suite") = "all",
        "Run a command; returns (json text, exit code).");
  m.def("render", [](const std::string& json_text, const std::string& format) {
    return efgc::render(nlohmann::ordered_json::parse(json_text), format);
  });
  m.def("describe_ring", [](const std::string& text) { return efgc::parse_ring(text)->describe(); });
  m.def("residue", &residue, py::arg("num"), py::arg("den"), py::arg("ring") = "Z");
}
