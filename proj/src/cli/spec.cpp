#include "efgc/cli/spec.hpp"

#include <toml.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "efgc/cli/parse.hpp"

namespace efgc {
namespace {

using nlohmann::json;

[[noreturn]] void spec_error(const std::string& msg) { throw Error(ErrorKind::kParseError, "model spec: " + msg); }

json to_json(const toml::node& n) {
  if (auto t = n.as_table()) {
    json out = json::object();
    for (auto&& [k, v] : *t) out[std::string(k.str())] = to_json(v);
    return out;
  }
  if (auto a = n.as_array()) {
    json out = json::array();
    for (auto&& v : *a) out.push_back(to_json(v));
    return out;
  }
  if (auto s = n.as_string()) return s->get();
  if (auto i = n.as_integer()) return i->get();
  if (auto b = n.as_boolean()) return b->get();
  spec_error("only strings, integers, booleans, arrays and tables are allowed");
}

void check_keys(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
  if (!obj.is_object()) spec_error("'" + where + "' must be a table");
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key())) spec_error("unknown key '" + (where.empty() ? "" : where + ".") + it.key() + "'");
}

std::string text_of(const json& v, const std::string& what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  spec_error(what + " must be a string or an integer");
}

int int_of(const json& v, const std::string& what, int lo) {
  if (!v.is_number_integer()) spec_error(what + " must be an integer");
  auto n = v.get<std::int64_t>();
  if (n < lo || n > 1 << 20) spec_error(what + " out of range");
  return static_cast<int>(n);
}

std::vector<RingValue> values_per_character(const json& v, const FinAbGroup& a, const Ring& k,
                                            const std::string& what) {
  std::vector<RingValue> out;
  if (v.is_array()) {
    if (static_cast<long>(v.size()) != a.order())
      spec_error(what + " needs " + std::to_string(a.order()) + " entries");
    for (const auto& x : v) out.push_back(parse_value(text_of(x, what), k));
    return out;
  }
  if (!v.is_object()) spec_error(what + " must be a list or a table of labels");
  std::vector<std::optional<RingValue>> slots(a.order());
  for (auto it = v.begin(); it != v.end(); ++it) {
    GroupElement g = a.rank() == 0 && it.key() == "0" ? GroupElement{} : a.parse_label(it.key());
    if (static_cast<int>(g.size()) != a.rank()) spec_error("bad character label '" + it.key() + "' in " + what);
    long idx = a.index(a.reduce(g));
    if (slots[idx]) spec_error("character '" + it.key() + "' given twice in " + what);
    slots[idx] = parse_value(text_of(it.value(), what), k);
  }
  for (long i = 0; i < a.order(); ++i) {
    if (!slots[i]) spec_error(what + " misses character " + a.label(a.element(i)));
    out.push_back(*slots[i]);
  }
  return out;
}

EFG build(const json& t, int N) {
  const json& model = t.at("model");
  std::string kind = model.at("kind").get<std::string>();
  auto has = [&](const char* key) { return model.contains(key); };
  auto forbid = [&](std::initializer_list<const char*> keys) {
    for (const char* key : keys)
      if (has(key)) spec_error("model key '" + std::string(key) + "' does not apply to kind " + kind);
  };
  auto need = [&](const char* key) -> const json& {
    if (!has(key)) spec_error("model kind " + kind + " needs '" + key + "'");
    return model.at(key);
  };

  FinAbGroup a;
  if (t.contains("group")) {
    std::vector<int> factors;
    for (const auto& f : t.at("group").at("factors")) factors.push_back(int_of(f, "group factor", 2));
    a = FinAbGroup(factors);
  } else if (kind == "counterexample") {
    a = FinAbGroup({2});
  } else {
    spec_error("[group] is required");
  }
  std::optional<std::string> base_text;
  if (t.contains("base")) base_text = t.at("base").at("ring").get<std::string>();
  auto base = [&](const char* fallback) {
    if (!base_text && !fallback) spec_error("[base] ring is required for kind " + kind);
    try {
      return parse_ring(base_text ? *base_text : fallback, a);
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::kInvalidRing) spec_error(err.what());
      throw;
    }
  };

  EFG e;
  if (kind == "multiplicative_universal") {
    forbid({"phi", "points", "f", "iota", "norm_unit"});
    e = multiplicative_universal(a, N, base("Z"));
  } else if (kind == "multiplicative" || kind == "product_over_field") {
    forbid({"points", "f", "iota", "norm_unit"});
    Ring k = base(nullptr);
    auto phi = values_per_character(need("phi"), a, k, "phi");
    e = kind == "multiplicative" ? multiplicative(k, a, phi, N) : product_over_field(k, a, phi, N);
  } else if (kind == "additive") {
    forbid({"phi", "f", "iota", "norm_unit"});
    Ring k = base(nullptr);
    e = additive(k, a, values_per_character(need("points"), a, k, "points"), N);
  } else if (kind == "counterexample") {
    forbid({"phi", "points", "f", "iota", "norm_unit"});
    if (a != FinAbGroup({2})) spec_error("the counterexample model has group Z/2");
    if (base_text && base(nullptr) != square_zero_f2()) spec_error("the counterexample model is over SZ2");
    e = counterexample(N);
  } else if (kind == "explicit") {
    forbid({"phi"});
    Ring k = base(nullptr);
    Poly f = parse_poly(text_of(need("f"), "f"), k);
    MPoly sigma = parse_mpoly(text_of(need("sigma"), "sigma"), k, {"x0", "x1"});
    Poly iota = parse_poly(text_of(need("iota"), "iota"), k);
    auto c = values_per_character(need("points"), a, k, "points");
    std::optional<RingValue> u;
    if (has("norm_unit")) u = parse_value(text_of(model.at("norm_unit"), "norm_unit"), k);
    return explicit_model_unchecked(k, a, f, sigma, iota, c, N, u);
  } else {
    spec_error("unknown model kind '" + kind + "'");
  }
  if (has("sigma")) e = e.with_sigma(parse_mpoly(text_of(model.at("sigma"), "sigma"), e.base(), {"x0", "x1"}));
  return e;
}

void check_schema(const json& t) {
  check_keys(t, "", {"name", "truncation", "group", "base", "model", "options"});
  if (t.contains("name") && !t.at("name").is_string()) spec_error("name must be a string");
  if (!t.contains("truncation")) spec_error("'truncation' is required");
  int_of(t.at("truncation"), "truncation", 1);
  if (t.contains("group")) {
    check_keys(t.at("group"), "group", {"factors"});
    if (!t.at("group").contains("factors") || !t.at("group").at("factors").is_array())
      spec_error("group.factors must be a list");
  }
  if (t.contains("base")) {
    check_keys(t.at("base"), "base", {"ring"});
    if (!t.at("base").contains("ring") || !t.at("base").at("ring").is_string())
      spec_error("base.ring must be a string");
  }
  if (!t.contains("model")) spec_error("[model] is required");
  check_keys(t.at("model"), "model", {"kind", "phi", "points", "f", "sigma", "iota", "norm_unit"});
  if (!t.at("model").contains("kind") || !t.at("model").at("kind").is_string())
    spec_error("model.kind must be a string");
  if (t.contains("options")) {
    check_keys(t.at("options"), "options", {"work_precision"});
    if (t.at("options").contains("work_precision")) int_of(t.at("options").at("work_precision"), "work_precision", 0);
  }
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ModelSpec parse_spec_text(const std::string& text, bool is_json, const std::string& source) {
  ModelSpec spec;
  spec.source = source;
  if (is_json) {
    try {
      spec.tree = json::parse(text);
    } catch (const json::exception& err) {
      spec_error(std::string("bad JSON: ") + err.what());
    }
  } else {
    try {
      toml::table tbl = toml::parse(text);
      spec.tree = to_json(tbl);
    } catch (const toml::parse_error& err) {
      std::ostringstream os;
      os << "bad TOML: " << err.description() << " (line " << err.source().begin.line << ")";
      spec_error(os.str());
    }
  }
  check_schema(spec.tree);
  spec.digest = fnv1a_hex(spec.tree.dump());
  return spec;
}

ModelSpec load_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) spec_error("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::filesystem::path p(path);
  return parse_spec_text(buf.str(), p.extension() == ".json", p.filename().string());
}

std::optional<int> env_work_precision() {
  const char* v = std::getenv("EFGC_WORK_PRECISION");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 0 || n > 4096)
    throw Error(ErrorKind::kParseError, "EFGC_WORK_PRECISION must be a non-negative integer");
  return static_cast<int>(n);
}

LoadedModel build_model(const ModelSpec& spec, std::optional<int> work_precision) {
  LoadedModel out;
  const json& t = spec.tree;
  out.truncation = t.at("truncation").get<int>();
  if (!work_precision) work_precision = env_work_precision();
  if (!work_precision && t.contains("options") && t.at("options").contains("work_precision"))
    work_precision = t.at("options").at("work_precision").get<int>();
  out.work_precision = work_precision.value_or(0);
  try {
    out.efg = build(t, out.truncation + out.work_precision);
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::kParseError || err.kind() == ErrorKind::kExprError) throw;
    out.build_error = err.what();
    return out;
  }
  out.report = validate_efg(*out.efg);
  return out;
}

}  // namespace efgc
