#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "efgc/checks/checks.hpp"

namespace {

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
};

// Wall-clock limits per criterion; exactness is checked by the properties themselves.
const Criterion kCriteria[] = {
    {1, "K-theory transfer value and eta square relation", 1.0},
    {2, "transfer theorem suite and presentation independence", 60.0},
    {3, "v_n identity suite and coordinate invariance", 30.0},
    {4, "residue suite", 30.0},
    {5, "duality suite", 60.0},
    {6, "divisor norm suite", 60.0},
    {7, "points-scheme rank", 10.0},
    {8, "moments", 60.0},
    {9, "counterexample at truncation", 5.0},
    {10, "Mackey axioms", 60.0},
    {11, "splitting idempotents", 10.0},
    {12, "CLI selftest and determinism", 300.0},
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs a command, returning its exit status and stdout.
int run_capture(const std::string& cmd, std::string& out) {
  out.clear();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool cli_criterion(std::string& note) {
  const std::string exe = EFGC_BINARY;
  const std::string specs = EFGC_SPEC_DIR;
  std::string a, b;
  if (run_capture(exe + " selftest --suite all", a) != 0) {
    note = "selftest --suite all did not exit 0";
    return false;
  }
  run_capture(exe + " selftest --suite all", b);
  if (a != b) {
    note = "selftest output differs between runs";
    return false;
  }
  const std::vector<std::string> commands = {"validate", "vn --max-n 4 --negative", "transfer", "mackey"};
  std::string listing;
  run_capture("ls " + specs + "/*.toml", listing);
  std::istringstream files(listing);
  std::string spec;
  int runs = 0;
  while (std::getline(files, spec)) {
    for (const auto& c : commands) {
      std::string cmd = exe + " " + c.substr(0, c.find(' ')) + " " + spec + c.substr(std::min(c.size(), c.find(' '))) +
                        " 2>/dev/null";
      int s1 = run_capture(cmd, a), s2 = run_capture(cmd, b);
      ++runs;
      if (s1 != s2 || a != b) {
        note = "non-deterministic output: " + cmd;
        return false;
      }
    }
  }
  note = std::to_string(runs) + " spec runs byte-identical";
  return runs > 0;
}

}  // namespace

int main() {
  efgc::SuiteOptions opt;
  int failed = 0;
  for (const auto& c : kCriteria) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string note;
    if (c.id == 12) {
      ok = cli_criterion(note);
    } else {
      std::vector<efgc::PropertyResult> results;
      try {
        results = efgc::run_criterion(c.id, opt);
      } catch (const std::exception& e) {
        ok = false;
        note = e.what();
      }
      long cases = 0;
      for (const auto& r : results) {
        cases += r.cases;
        if (!r.pass()) {
          if (ok) note = r.name + ": " + r.first_failure;
          ok = false;
        }
      }
      if (results.empty()) ok = false;
      if (ok) note = std::to_string(results.size()) + " properties, " + std::to_string(cases) + " cases";
    }
    double dt = seconds_since(t0);
    bool in_time = dt < c.limit_seconds;
    if (!in_time) note += " (over time limit)";
    bool pass = ok && in_time;
    failed += !pass;
    std::printf("criterion %2d %s  %-55s %7.2fs / %5.0fs  %s\n", c.id, pass ? "PASS" : "FAIL", c.title, dt,
                c.limit_seconds, note.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
