#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "efgc/cli/commands.hpp"
#include "efgc/cli/parse.hpp"
#include "efgc/cli/spec.hpp"
#include "test_util.hpp"

namespace efgc {
namespace {

using testing::iv;
using testing::Rng;
using ojson = nlohmann::ordered_json;

std::string spec_path(const std::string& name) { return std::string(EFGC_SPEC_DIR) + "/" + name; }

std::string temp_spec(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "efgc_cli_test";
  std::filesystem::create_directories(dir);
  auto p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

CommandOutput run(const std::string& cmd, const std::optional<std::string>& spec, CommandOptions opt = {}) {
  return run_command(cmd, spec, opt);
}

const ojson& find_row(const ojson& rows, const std::string& key, const std::string& value) {
  for (const auto& r : rows)
    if (r.at(key) == value) return r;
  throw std::runtime_error("row not found: " + value);
}

std::string error_kind(const CommandOutput& out) { return out.doc["results"]["error"]["kind"]; }

const char* kTrivialGroupSpec = R"(
truncation = 2
[group]
factors = []
[model]
kind = "multiplicative_universal"
)";

TEST(RingDescriptor, MenuAndTowers) {
  EXPECT_EQ(parse_ring("Z"), integers());
  EXPECT_EQ(parse_ring("Q"), rationals());
  EXPECT_EQ(parse_ring("SZ2"), square_zero_f2());
  EXPECT_TRUE(same_ring(parse_ring("F5"), prime_field(5)));
  EXPECT_TRUE(same_ring(parse_ring("F_5"), prime_field(5)));
  EXPECT_TRUE(same_ring(parse_ring("Z/6"), integers_mod(6)));
  EXPECT_TRUE(same_ring(parse_ring("Z[A*]", FinAbGroup({2, 2})), group_ring(integers(), FinAbGroup({2, 2}))));
  EXPECT_TRUE(same_ring(parse_ring("Q[3;a]"), group_ring(rationals(), FinAbGroup({3}))));
  EXPECT_EQ(parse_ring("Q[3;a]")->symbols(), std::vector<std::string>{"a"});
  Ring r = parse_ring("Z[v]/(v^2-1)");
  EXPECT_TRUE(same_ring(r, poly_quotient(integers(), {iv(integers(), -1), iv(integers(), 0), iv(integers(), 1)})));
  EXPECT_EQ(r->variable(), "v");
  Ring t = parse_ring("(Q[e]/(e^2))[t]/(t^2 - e)");
  ASSERT_EQ(t->kind(), RingKind::kPolyQuotient);
  EXPECT_EQ(t->base()->kind(), RingKind::kPolyQuotient);
  RingValue tv = RingValue::generator(t);
  EXPECT_TRUE((tv * tv * tv * tv).is_zero());
}

TEST(RingDescriptor, DescribeRoundTrip) {
  std::vector<Ring> rings = testing::menu_rings();
  rings.push_back(square_zero_f2());
  rings.push_back(poly_quotient(testing::z_c2(), {RingValue::group_basis(testing::z_c2(), 1), iv(testing::z_c2(), 0),
                                                  iv(testing::z_c2(), 1)}));
  for (const Ring& r : rings) EXPECT_TRUE(same_ring(parse_ring(r->describe()), r)) << r->describe();
}

TEST(RingDescriptor, Errors) {
  for (const char* bad : {"", "R", "Z[", "Z[A*]", "Z[t]/(2*t)", "Z[t]/(t", "Q)", "F", "Z[2;a,b]"}) {
    try {
      parse_ring(bad);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_TRUE(e.kind() == ErrorKind::kParseError || e.kind() == ErrorKind::kInvalidRing) << bad;
    }
  }
}

TEST(Expressions, ValueTextRoundTrip) {
  Rng rng(11);
  std::vector<Ring> rings = testing::menu_rings();
  rings.push_back(square_zero_f2());
  for (const Ring& r : rings)
    for (int trial = 0; trial < 40; ++trial) {
      RingValue v = testing::random_value(r, rng);
      EXPECT_EQ(parse_value(v.to_string(), r), v) << r->describe() << " " << v.to_string();
      Poly p = testing::random_poly(r, static_cast<int>(testing::uniform(rng, 0, 4)), rng);
      EXPECT_EQ(parse_poly(p.to_string("x"), r), p) << p.to_string("x");
    }
}

TEST(Expressions, Arithmetic) {
  Ring q = rationals();
  EXPECT_EQ(parse_value("1/2 + 1/3", q), RingValue::from_rational(q, mpq_class(5, 6)));
  EXPECT_EQ(parse_value("-(2^3 - 1)*3", q), iv(q, -21));
  Ring z = integers();
  EXPECT_EQ(parse_poly("(x + 1)^2", z), Poly::from_ints(z, {1, 2, 1}));
  MPoly s = parse_mpoly("x0 + x1 - x0*x1", z, {"x0", "x1"});
  EXPECT_EQ(s, MPoly::variable(z, 2, 0) + MPoly::variable(z, 2, 1) - MPoly::variable(z, 2, 0) * MPoly::variable(z, 2, 1));
  Ring zc = testing::z_c2();
  EXPECT_EQ(parse_value("v^2", zc), RingValue::one(zc));
  Ring sz = square_zero_f2();
  EXPECT_TRUE(parse_value("e*u2 + u1", sz).is_zero());
  Ring f5 = prime_field(5);
  EXPECT_EQ(parse_value("1/2", f5), iv(f5, 3));
}

TEST(Expressions, Errors) {
  Ring z = integers();
  for (const char* bad : {"1/2", "x/x", "y", "1 +", "(1", "2^", "1 2", "#"}) {
    try {
      parse_poly(bad, z);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kExprError) << bad;
    }
  }
}

TEST(DivisorExpressions, Examples) {
  CommandOptions opt;
  opt.expr = "point(0)+point(0)";
  auto out = run("divisor", spec_path("ktheory_z2.toml"), opt);
  ASSERT_EQ(out.exit_code, 0) << out.doc.dump();
  EXPECT_EQ(out.doc["results"]["gen_text"], "x^2");
  EXPECT_EQ(out.doc["results"]["euler"], "0");

  opt.expr = "full";
  out = run("divisor", spec_path("ktheory_z2.toml"), opt);
  ASSERT_EQ(out.exit_code, 0);
  EXPECT_EQ(out.doc["results"]["gen"], ojson({"0", "-1+v", "1"}));

  opt.expr = "point(1)*point(1)";
  out = run("divisor", spec_path("ktheory_z2.toml"), opt);
  ASSERT_EQ(out.exit_code, 0);
  EXPECT_EQ(out.doc["results"]["gen_text"], "x");
}

TEST(DivisorExpressions, AgreesWithLibrary) {
  auto m = build_model(load_spec(spec_path("product_f7.toml")));
  ASSERT_TRUE(m.valid());
  const EFG& e = *m.efg;
  Divisor d = parse_divisor("tr(2, point(1) + point(3)) - point(5)", e);
  EXPECT_EQ(d, character_divisor(e, {1}));
  EXPECT_EQ(parse_divisor("tr((2), point(1))", e), character_divisor(e, {5}));
  EXPECT_EQ(parse_divisor("point(1) * (point(2) + zero)", e), character_divisor(e, {3}));
  // c_1 = 1 - 3 = 5 in F7, written as a value rather than a character.
  EXPECT_EQ(parse_divisor("point(4+1)", e), character_divisor(e, {1}));
  EXPECT_THROW(parse_divisor("point(1+0)", e), Error);
  EXPECT_EQ(parse_divisor("full - full", e), empty_divisor(e));
  for (const char* bad : {"point(9,9)", "pt(1)", "tr(1 point(1))", "point(1) +", "(zero"}) {
    try {
      parse_divisor(bad, e);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& err) {
      EXPECT_TRUE(err.kind() == ErrorKind::kExprError || err.kind() == ErrorKind::kParseError) << bad;
    }
  }
}

TEST(Validate, ExitCodes) {
  auto ok = run("validate", spec_path("ktheory_z2.toml"));
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_EQ(ok.doc["results"]["pass"], true);

  auto bad = run("validate", spec_path("invalid/tampered_sigma.toml"));
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_EQ(bad.doc["results"]["pass"], false);
  EXPECT_EQ(find_row(bad.doc["results"]["checks"], "name", "sigma_symmetric")["pass"], false);

  auto malformed = run("validate", spec_path("invalid/malformed.toml"));
  EXPECT_EQ(malformed.exit_code, 2);
  EXPECT_EQ(error_kind(malformed), "ParseError");

  auto other = run("vn", spec_path("invalid/tampered_sigma.toml"));
  EXPECT_EQ(other.exit_code, 1);
  EXPECT_EQ(error_kind(other), "ValidationFailed");
}

TEST(Validate, BundledSpecsPass) {
  for (const auto& entry : std::filesystem::directory_iterator(EFGC_SPEC_DIR)) {
    if (entry.path().extension() != ".toml") continue;
    auto out = run("validate", entry.path().string());
    EXPECT_EQ(out.exit_code, 0) << entry.path();
  }
}

TEST(SpecFormat, RejectsUnknownKeysAndBadValues) {
  const char* cases[] = {
      "truncation = 2\ncolour = 1\n[group]\nfactors=[2]\n[model]\nkind=\"multiplicative_universal\"\n",
      "truncation = 2\n[group]\nfactors=[2]\norder=2\n[model]\nkind=\"multiplicative_universal\"\n",
      "truncation = 2\n[group]\nfactors=[2]\n[model]\nkind=\"multiplicative_universal\"\nphi=[1,1]\n",
      "truncation = 2\n[group]\nfactors=[2]\n[model]\nkind=\"lunar\"\n",
      "truncation = 0\n[group]\nfactors=[2]\n[model]\nkind=\"multiplicative_universal\"\n",
      "truncation = 2.5\n[group]\nfactors=[2]\n[model]\nkind=\"multiplicative_universal\"\n",
      "truncation = 2\n[group]\nfactors=[2]\n[base]\nring=\"F6\"\n[model]\nkind=\"additive\"\npoints=[0,0]\n",
      "truncation = 2\n[group]\nfactors=[2]\n[base]\nring=\"Q\"\n[model]\nkind=\"additive\"\npoints=[0]\n",
      "truncation = 2\n[group]\nfactors=[2]\n[base]\nring=\"Q\"\n[model]\nkind=\"additive\"\npoints=[0, \"y\"]\n",
  };
  int i = 0;
  for (const char* text : cases) {
    auto out = run("validate", temp_spec("bad" + std::to_string(i++) + ".toml", text));
    EXPECT_EQ(out.exit_code, 2) << text << "\n" << out.doc.dump();
  }
}

TEST(SpecFormat, BuilderRefusalIsValidationFailure) {
  // phi(1) = 2 is not a homomorphism Z/2 -> Q^x.
  auto out = run("validate", temp_spec("phi.toml",
                                       "truncation = 2\n[group]\nfactors=[2]\n[base]\nring=\"Q\"\n"
                                       "[model]\nkind=\"multiplicative\"\nphi=[1,2]\n"));
  EXPECT_EQ(out.exit_code, 1);
  EXPECT_EQ(out.doc["results"]["checks"][0]["name"], "build");
}

TEST(SpecFormat, LabelTableMatchesList) {
  auto a = build_model(parse_spec_text(
      "truncation = 2\n[group]\nfactors=[6]\n[base]\nring=\"F7\"\n[model]\nkind=\"product_over_field\"\n"
      "phi = { \"0\" = 1, \"1\" = 3, \"2\" = 2, \"3\" = 6, \"4\" = 4, \"5\" = 5 }\n",
      false, "a"));
  auto b = build_model(load_spec(spec_path("product_f7.toml")));
  ASSERT_TRUE(a.valid() && b.valid());
  EXPECT_EQ(a.efg->points(), b.efg->points());
}

TEST(SpecFormat, DigestRoundTripAndJsonMirror) {
  for (const char* name : {"ktheory_z2.toml", "product_f7.toml", "explicit_multiplicative.toml"}) {
    auto out = run("validate", spec_path(name));
    ModelSpec s = load_spec(spec_path(name));
    EXPECT_EQ(out.doc["inputs"]["digest"], s.digest);
    EXPECT_EQ(out.doc["inputs"]["spec"], name);
    std::string mirror = temp_spec(std::string(name) + ".json", s.tree.dump(2));
    ModelSpec j = load_spec(mirror);
    EXPECT_EQ(j.digest, s.digest);
    auto a = run("transfer", spec_path(name));
    auto b = run("transfer", mirror);
    EXPECT_EQ(a.doc["results"].dump(), b.doc["results"].dump());
  }
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST(SpecFormat, WorkPrecision) {
  std::string p = temp_spec("wp.toml",
                            "truncation = 2\n[group]\nfactors=[2]\n[model]\nkind=\"multiplicative_universal\"\n"
                            "[options]\nwork_precision = 1\n");
  auto m = build_model(load_spec(p));
  EXPECT_EQ(m.work_precision, 1);
  EXPECT_EQ(m.efg->curve().truncation(), 3);
  setenv("EFGC_WORK_PRECISION", "3", 1);
  auto env = build_model(load_spec(p));
  EXPECT_EQ(env.efg->curve().truncation(), 5);
  auto out = run("validate", p);
  EXPECT_EQ(out.doc["results"]["work_precision"], 3);
  setenv("EFGC_WORK_PRECISION", "x", 1);
  EXPECT_EQ(run("validate", p).exit_code, 2);
  unsetenv("EFGC_WORK_PRECISION");
}

TEST(Vn, Examples) {
  CommandOptions opt;
  opt.max_n = 2;
  auto out = run("vn", spec_path("ktheory_z2.toml"), opt);
  ASSERT_EQ(out.exit_code, 0);
  const auto& rows = out.doc["results"]["rows"];
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[3]["n"], 2);
  EXPECT_EQ(rows[3]["alpha"], "1");
  EXPECT_EQ(rows[3]["value"], "1+v");

  opt.max_n = 5;
  opt.negative = true;
  out = run("vn", spec_path("additive_zero.toml"), opt);
  ASSERT_EQ(out.exit_code, 0);
  for (const auto& r : out.doc["results"]["rows"]) EXPECT_EQ(r["value"], std::to_string(r["n"].get<long>()));

  out = run("vn", spec_path("product_f7.toml"), opt);
  ASSERT_EQ(out.exit_code, 0);
  long ones = 0;
  for (const auto& r : out.doc["results"]["rows"])
    if (r["n"] == 1) {
      EXPECT_EQ(r["value"], "1");
      ++ones;
    }
  EXPECT_EQ(ones, 6);
}

TEST(Vn, NegativeNeedsHeadroom) {
  // At N = 1 the value v_{-1}(0) = (iota / x)(0) is not determined.
  CommandOptions opt;
  opt.negative = true;
  std::string p = temp_spec("n1.toml", "truncation = 1\n[group]\nfactors=[2]\n[model]\nkind=\"multiplicative_universal\"\n");
  auto out = run("vn", p, opt);
  EXPECT_EQ(out.exit_code, 1);
  EXPECT_EQ(error_kind(out), "PrecisionExceeded");
}

TEST(Transfer, Examples) {
  auto out = run("transfer", spec_path("ktheory_z2.toml"));
  ASSERT_EQ(out.exit_code, 0);
  const auto& eta = out.doc["results"]["eta"];
  EXPECT_EQ(find_row(eta, "class", "[A/A]")["value"], "1");
  EXPECT_EQ(find_row(eta, "class", "[A/1]")["value"], "1+v");
  EXPECT_EQ(out.doc["results"]["ring_map"]["pass"], true);

  // phi = 0 gives the augmentation |A/B|.
  out = run("transfer", spec_path("additive_zero.toml"));
  ASSERT_EQ(out.exit_code, 0);
  EXPECT_EQ(find_row(out.doc["results"]["eta"], "class", "[A/A]")["value"], "1");
  EXPECT_EQ(find_row(out.doc["results"]["eta"], "class", "[A/1]")["value"], "3");

  out = run("transfer", temp_spec("trivial.toml", kTrivialGroupSpec));
  ASSERT_EQ(out.exit_code, 0) << out.doc.dump();
  ASSERT_EQ(out.doc["results"]["t"].size(), 1u);
  EXPECT_EQ(out.doc["results"]["t"][0]["value"], "1");
  EXPECT_EQ(out.doc["results"]["eta"].size(), 1u);
}

TEST(Mackey, BundledSpecsPass) {
  for (const char* name : {"ktheory_z2xz2.toml", "additive_zero.toml", "product_f7.toml"}) {
    auto out = run("mackey", spec_path(name));
    EXPECT_EQ(out.exit_code, 0) << name;
    EXPECT_EQ(out.doc["results"]["pass"], true);
    EXPECT_FALSE(out.doc["results"]["axioms"].empty());
  }
}

TEST(ResidueCommand, ValuesAndErrors) {
  CommandOptions opt;
  opt.ring = "Z";
  opt.num = "x^3";
  opt.den = "x^2 - 2";
  auto out = run("residue", std::nullopt, opt);
  ASSERT_EQ(out.exit_code, 0);
  // x^3 = 2x mod x^2 - 2.
  EXPECT_EQ(out.doc["results"]["residue"], "2");
  opt.den = "2*x";
  EXPECT_EQ(run("residue", std::nullopt, opt).exit_code, 1);
  opt.den = "x +";
  EXPECT_EQ(run("residue", std::nullopt, opt).exit_code, 2);
  opt.den.reset();
  EXPECT_EQ(run("residue", std::nullopt, opt).exit_code, 2);
  opt.ring.reset();
  opt.den = "x";
  EXPECT_EQ(run("residue", std::nullopt, opt).exit_code, 2);
}

TEST(DualityCommand, ChecksPass) {
  CommandOptions opt;
  opt.ring = "Z[v]/(v^2-1)";
  opt.den = "x^4 + v*x^2 - 3*x + v";
  auto out = run("duality", std::nullopt, opt);
  ASSERT_EQ(out.exit_code, 0) << out.doc.dump();
  EXPECT_EQ(out.doc["results"]["theta0_matrix"].size(), 4u);
  for (const auto& c : out.doc["results"]["checks"]) EXPECT_EQ(c["pass"], true) << c.dump();
}

TEST(MomentsCommand, FullSetMatchesSymmetricSums) {
  CommandOptions opt;
  opt.expr = "point(1)+point(2)";
  auto out = run("moments", spec_path("product_f7.toml"), opt);
  ASSERT_EQ(out.exit_code, 0) << out.doc.dump();
  EXPECT_EQ(out.doc["results"]["degree"], 2);
  EXPECT_FALSE(out.doc["results"]["entries"].empty());
}

TEST(Selftest, SuiteSelection) {
  CommandOptions opt;
  opt.suite = "counterexample";
  auto out = run("selftest", std::nullopt, opt);
  EXPECT_EQ(out.exit_code, 0);
  EXPECT_EQ(out.doc["results"]["pass"], true);
  for (const auto& p : out.doc["results"]["properties"]) EXPECT_EQ(p["suite"], "counterexample");
  opt.suite = "astrology";
  EXPECT_EQ(run("selftest", std::nullopt, opt).exit_code, 2);
}

TEST(Commands, UnknownCommandAndMissingSpec) {
  EXPECT_EQ(run("frobnicate", std::nullopt).exit_code, 2);
  EXPECT_EQ(run("vn", std::nullopt).exit_code, 2);
  EXPECT_EQ(run("vn", spec_path("missing.toml")).exit_code, 2);
  CommandOptions opt;
  EXPECT_EQ(run("divisor", spec_path("ktheory_z2.toml"), opt).exit_code, 2);
  opt.expr = "point(7,7)";
  EXPECT_EQ(run("divisor", spec_path("ktheory_z2.toml"), opt).exit_code, 2);
}

TEST(Commands, Determinism) {
  CommandOptions opt;
  opt.max_n = 3;
  opt.negative = true;
  for (const char* cmd : {"validate", "vn", "transfer", "mackey"})
    for (const char* name : {"ktheory_z2.toml", "counterexample.toml", "explicit_multiplicative.toml"}) {
      auto a = run(cmd, spec_path(name), opt);
      auto b = run(cmd, spec_path(name), opt);
      EXPECT_EQ(render(a.doc, "json"), render(b.doc, "json")) << cmd << " " << name;
      EXPECT_EQ(a.doc["schema"], "efgc/1");
    }
}

TEST(Render, Formats) {
  CommandOptions opt;
  opt.max_n = 2;
  auto out = run("vn", spec_path("ktheory_z2.toml"), opt);
  std::string csv = render(out.doc, "csv");
  EXPECT_EQ(csv, "n,alpha,value\n1,0,1\n1,1,1\n2,0,2\n2,1,1+v\n");
  std::string pretty = render(out.doc, "pretty");
  EXPECT_NE(pretty.find("efgc vn"), std::string::npos);
  EXPECT_NE(pretty.find("1+v"), std::string::npos);
  auto tr = run("transfer", spec_path("ktheory_z2.toml"));
  std::string multi = render(tr.doc, "csv");
  EXPECT_NE(multi.find("# t\n"), std::string::npos);
  EXPECT_NE(multi.find("# eta\n"), std::string::npos);
  EXPECT_THROW(render(out.doc, "xml"), Error);
  CommandOptions r;
  r.ring = "Q";
  r.num = "1";
  r.den = "x - 1/2";
  auto res = run("residue", std::nullopt, r);
  EXPECT_NE(render(res.doc, "csv").find("residue,1\n"), std::string::npos);
}

}  // namespace
}  // namespace efgc
