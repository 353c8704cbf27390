#include "efgc/cli/commands.hpp"

#include <functional>
#include <map>

#include "efgc/abelian/burnside.hpp"
#include "efgc/checks/checks.hpp"
#include "efgc/cli/parse.hpp"
#include "efgc/cli/spec.hpp"
#include "efgc/resdual/resdual.hpp"
#include "efgc/ringkit/linalg.hpp"
#include "efgc/transfer/transfer.hpp"

namespace efgc {
namespace {

using ojson = nlohmann::ordered_json;

struct Context {
  const CommandOptions& opt;
  std::optional<ModelSpec> spec;
  std::optional<LoadedModel> model;
  ojson inputs = ojson::object();
  int exit_code = 0;

  const ModelSpec& need_spec() const {
    if (!spec) throw Error(ErrorKind::kParseError, "this command needs a model spec file");
    return *spec;
  }
  const LoadedModel& load() {
    if (!model) model = build_model(need_spec());
    return *model;
  }
  // The model, after its validation report passed.
  const EFG& efg() {
    const LoadedModel& m = load();
    if (!m.build_error.empty()) throw Error(ErrorKind::kValidationFailed, m.build_error);
    if (!m.report.all_pass())
      throw Error(ErrorKind::kValidationFailed, m.efg->name() + ": " + m.report.first_failure());
    return *m.efg;
  }
};

const std::string& need_flag(const std::optional<std::string>& v, const char* flag) {
  if (!v) throw Error(ErrorKind::kParseError, std::string("missing ") + flag);
  return *v;
}

std::string class_label(const Subgroup& b) {
  if (b == Subgroup::whole(b.group())) return "[A/A]";
  if (b.order() == 1) return "[A/1]";
  return "[A/" + b.label() + "]";
}

ojson model_summary(const EFG& e, const LoadedModel& m) {
  ojson s;
  s["model"] = e.name();
  s["base"] = e.base()->describe();
  s["group"] = e.group().describe();
  s["truncation"] = m.truncation;
  s["work_precision"] = m.work_precision;
  s["f"] = e.curve().f().to_string("x");
  return s;
}

ojson cmd_validate(Context& ctx) {
  const LoadedModel& m = ctx.load();
  ojson r;
  if (m.efg) r = model_summary(*m.efg, m);
  ojson checks = ojson::array();
  if (!m.build_error.empty()) checks.push_back({{"name", "build"}, {"pass", false}, {"detail", m.build_error}});
  for (const auto& c : m.report.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  r["checks"] = checks;
  r["pass"] = m.valid();
  if (!m.valid()) ctx.exit_code = 1;
  return r;
}

ojson cmd_vn(Context& ctx) {
  const EFG& e = ctx.efg();
  if (ctx.opt.max_n < 1) throw Error(ErrorKind::kParseError, "--max-n must be at least 1");
  ctx.inputs["max_n"] = ctx.opt.max_n;
  ctx.inputs["negative"] = ctx.opt.negative;
  ojson rows = ojson::array();
  const FinAbGroup& A = e.group();
  for (long n = ctx.opt.negative ? -ctx.opt.max_n : 1; n <= ctx.opt.max_n; ++n) {
    if (n == 0) continue;
    for (long i = 0; i < A.order(); ++i) {
      GroupElement alpha = A.element(i);
      rows.push_back({{"n", n}, {"alpha", A.label(alpha)}, {"value", vn_at_point(e, n, alpha).to_string()}});
    }
  }
  ojson r = model_summary(e, *ctx.model);
  r["rows"] = rows;
  return r;
}

ojson cmd_transfer(Context& ctx) {
  const EFG& e = ctx.efg();
  const FinAbGroup& A = e.group();
  auto subs = subgroups_all(A);
  ojson t = ojson::array();
  for (const auto& u : subs)
    t.push_back({{"subgroup", u.label()}, {"order", u.order()}, {"value", transfer_element(e, u).to_string()}});
  ojson eta = ojson::array();
  std::map<Subgroup, RingValue> eta_of;
  for (const auto& b : subs) {
    eta_of.emplace(b, eta_burnside(e, BurnsideElement::basis(b)));
    eta.push_back({{"class", class_label(b)}, {"subgroup", b.label()}, {"value", eta_of.at(b).to_string()}});
  }
  ojson checks = ojson::array();
  bool all = true;
  bool unit_ok = eta_burnside(e, BurnsideElement::one(A)).is_one();
  all = all && unit_ok;
  checks.push_back({{"identity", "eta([A/A]) = 1"}, {"pass", unit_ok}});
  for (size_t i = 0; i < subs.size(); ++i)
    for (size_t j = i; j < subs.size(); ++j) {
      BurnsideElement prod = burnside_mul(BurnsideElement::basis(subs[i]), BurnsideElement::basis(subs[j]));
      bool ok = eta_burnside(e, prod) == eta_of.at(subs[i]) * eta_of.at(subs[j]);
      all = all && ok;
      checks.push_back({{"identity", "eta(" + class_label(subs[i]) + "*" + class_label(subs[j]) + ")"}, {"pass", ok}});
    }
  ojson r = model_summary(e, *ctx.model);
  r["t"] = t;
  r["eta"] = eta;
  r["ring_map"] = {{"pass", all}, {"checks", checks}};
  if (!all) ctx.exit_code = 1;
  return r;
}

ojson cmd_mackey(Context& ctx) {
  const EFG& e = ctx.efg();
  MackeyData m = mackey_build(e);
  ojson subs = ojson::array();
  for (const auto& b : m.subgroups()) subs.push_back(b.label());
  ojson tau = ojson::array();
  for (const auto& b : m.subgroups())
    for (const auto& c : m.subgroups())
      if (b.contains(c)) tau.push_back({{"b", b.label()}, {"c", c.label()}, {"value", m.tau(b, c).to_string()}});
  ojson axioms = ojson::array();
  bool all = true;
  for (const auto& a : mackey_verify(m)) {
    all = all && a.pass;
    axioms.push_back({{"axiom", a.axiom}, {"chain", a.chain}, {"pass", a.pass}});
  }
  ojson r = model_summary(e, *ctx.model);
  r["subgroups"] = subs;
  r["tau"] = tau;
  r["axioms"] = axioms;
  r["pass"] = all;
  if (!all) ctx.exit_code = 1;
  return r;
}

ojson divisor_summary(const Divisor& d) {
  ojson r;
  r["base"] = d.base()->describe();
  r["degree"] = d.degree();
  ojson gen = ojson::array();
  for (const auto& c : d.gen().coeffs()) gen.push_back(c.to_string());
  r["gen"] = gen;
  r["gen_text"] = d.gen().to_string("x");
  r["openness"] = d.openness_exponent();
  return r;
}

ojson cmd_divisor(Context& ctx) {
  const EFG& e = ctx.efg();
  const std::string& expr = need_flag(ctx.opt.expr, "--expr");
  ctx.inputs["expr"] = expr;
  Divisor d = parse_divisor(expr, e);
  ojson r = divisor_summary(d);
  r["fD"] = d.curve().poly_of(fD_norm(d)).to_string("x");
  r["euler"] = euler_class(d).to_string();
  return r;
}

ojson cmd_moments(Context& ctx) {
  const EFG& e = ctx.efg();
  const std::string& expr = need_flag(ctx.opt.expr, "--expr");
  ctx.inputs["expr"] = expr;
  Divisor d = parse_divisor(expr, e);
  MomentVector mv = moments(d);
  ojson r = divisor_summary(d);
  r["cutoff"] = mv.cutoff;
  ojson entries = ojson::array();
  for (const auto& [idx, v] : mv.entries) {
    std::string key;
    for (size_t i = 0; i < idx.size(); ++i) key += (i ? "," : "") + std::to_string(idx[i]);
    entries.push_back({{"index", key}, {"value", v.to_string()}});
  }
  r["entries"] = entries;
  return r;
}

Ring command_ring(Context& ctx) {
  if (ctx.opt.ring) {
    ctx.inputs["ring"] = *ctx.opt.ring;
    std::optional<FinAbGroup> g;
    if (ctx.spec && ctx.spec->tree.contains("group")) {
      std::vector<int> factors;
      for (const auto& f : ctx.spec->tree.at("group").at("factors")) factors.push_back(f.get<int>());
      g = FinAbGroup(factors);
    }
    return parse_ring(*ctx.opt.ring, g);
  }
  if (ctx.spec) return ctx.efg().base();
  throw Error(ErrorKind::kParseError, "missing --ring");
}

ojson cmd_residue(Context& ctx) {
  Ring k = command_ring(ctx);
  const std::string& num = need_flag(ctx.opt.num, "--num");
  const std::string& den = need_flag(ctx.opt.den, "--den");
  ctx.inputs["num"] = num;
  ctx.inputs["den"] = den;
  Poly p = parse_poly(num, k), q = parse_poly(den, k);
  ojson r;
  r["ring"] = k->describe();
  r["num"] = p.to_string("x");
  r["den"] = q.to_string("x");
  r["residue"] = residue(p, q).to_string();
  return r;
}

ojson cmd_duality(Context& ctx) {
  Ring k = command_ring(ctx);
  const std::string& den = need_flag(ctx.opt.den, "--den");
  ctx.inputs["den"] = den;
  Poly f = parse_poly(den, k);
  if (f.degree() < 1 || !f.is_monic()) throw Error(ErrorKind::kNonMonicDenominator, "--den must be monic of degree >= 1");
  DualityAlgebra alg(f);
  RingValue one = RingValue::one(k);
  Matrix th = alg.theta0_matrix();
  ojson mat = ojson::array();
  for (long i = 0; i < th.rows(); ++i) {
    ojson row = ojson::array();
    for (long j = 0; j < th.cols(); ++j) row.push_back(th(i, j).to_string());
    mat.push_back(row);
  }
  ojson checks = ojson::array();
  bool all = true;
  auto check = [&](const std::string& name, const std::string& lhs, const std::string& rhs, bool pass) {
    all = all && pass;
    checks.push_back({{"name", name}, {"lhs", lhs}, {"rhs", rhs}, {"pass", pass}});
  };
  RingValue det = det_division_free(th);
  check("theta0_det", det.to_string(), "+-1", det == one || det == -one);
  for (int j = 0; j < alg.rank(); ++j) {
    Functional z = alg.basis_functional(j);
    RingValue lhs = alg.epsilon(alg.theta0(z)), rhs = alg.apply(z, Poly::constant(one));
    check("epsilon_theta0[" + std::to_string(j) + "]", lhs.to_string(), rhs.to_string(), lhs == rhs);
  }
  Poly contraction = alg.epsilon_contraction();
  check("epsilon_contraction", contraction.to_string("x"), "1", contraction == Poly::constant(one));
  Poly te = alg.theta0(alg.trace_functional()), fp = alg.reduce(f.derivative());
  check("trace_element", te.to_string("x"), fp.to_string("x"), te == fp);
  for (int j = 0; j < alg.rank(); ++j) {
    auto [a, b] = residue_pairing_check(alg, alg.basis_functional(j));
    check("residue_pairing[" + std::to_string(j) + "]", a.to_string(), b.to_string(), a == b);
  }
  ojson psi = ojson::array();
  for (const auto& v : alg.psi().values) psi.push_back(v.to_string());
  ojson r;
  r["ring"] = k->describe();
  r["f"] = f.to_string("x");
  r["rank"] = alg.rank();
  r["theta0_matrix"] = mat;
  r["psi"] = psi;
  r["checks"] = checks;
  r["pass"] = all;
  if (!all) ctx.exit_code = 1;
  return r;
}

ojson cmd_selftest(Context& ctx) {
  SuiteOptions so;
  if (auto wp = env_work_precision()) {
    so.work_precision = *wp;
  } else if (ctx.spec && ctx.spec->tree.contains("options") && ctx.spec->tree.at("options").contains("work_precision")) {
    so.work_precision = ctx.spec->tree.at("options").at("work_precision").get<int>();
  }
  const std::string& suite = ctx.opt.suite;
  bool known = suite == "all";
  for (const auto& s : suite_names()) known = known || s == suite;
  if (!known) throw Error(ErrorKind::kParseError, "unknown suite '" + suite + "'");
  ctx.inputs["suite"] = suite;
  ctx.inputs["work_precision"] = so.work_precision;
  ojson props = ojson::array();
  bool all = true;
  long cases = 0;
  for (const auto& p : run_suite(suite, so)) {
    all = all && p.pass();
    cases += p.cases;
    props.push_back({{"suite", p.suite},
                     {"name", p.name},
                     {"cases", p.cases},
                     {"failures", p.failures},
                     {"pass", p.pass()},
                     {"first_failure", p.first_failure}});
  }
  ojson r;
  r["suite"] = suite;
  r["properties"] = props;
  r["cases"] = cases;
  r["pass"] = all;
  if (!all) ctx.exit_code = 1;
  return r;
}

const std::map<std::string, std::function<ojson(Context&)>>& handlers() {
  static const std::map<std::string, std::function<ojson(Context&)>> h = {
      {"validate", cmd_validate}, {"vn", cmd_vn},         {"transfer", cmd_transfer},
      {"mackey", cmd_mackey},     {"divisor", cmd_divisor}, {"residue", cmd_residue},
      {"duality", cmd_duality},   {"moments", cmd_moments}, {"selftest", cmd_selftest},
  };
  return h;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"validate", "vn",      "transfer", "mackey",  "divisor",
                                                 "residue",  "duality", "moments",  "selftest"};
  return names;
}

CommandOutput run_command(const std::string& command, const std::optional<std::string>& spec_path,
                          const CommandOptions& opt) {
  CommandOutput out;
  Context ctx{opt, std::nullopt, std::nullopt};
  out.doc["schema"] = "efgc/1";
  out.doc["command"] = command;
  ojson results;
  try {
    auto it = handlers().find(command);
    if (it == handlers().end()) throw Error(ErrorKind::kParseError, "unknown command '" + command + "'");
    if (spec_path) {
      ctx.spec = load_spec(*spec_path);
      ctx.inputs["spec"] = ctx.spec->source;
      ctx.inputs["digest"] = ctx.spec->digest;
    }
    results = it->second(ctx);
    out.exit_code = ctx.exit_code;
  } catch (const Error& err) {
    bool usage = err.kind() == ErrorKind::kParseError || err.kind() == ErrorKind::kExprError;
    out.exit_code = usage ? 2 : 1;
    results = {{"error", {{"kind", error_kind_name(err.kind())}, {"message", err.what()}}}};
  } catch (const std::exception& err) {
    out.exit_code = 1;
    results = {{"error", {{"kind", "Internal"}, {"message", err.what()}}}};
  }
  out.doc["inputs"] = ctx.inputs;
  out.doc["results"] = results;
  return out;
}

}  // namespace efgc
