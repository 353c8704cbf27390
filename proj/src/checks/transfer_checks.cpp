#include <functional>
#include <numeric>

#include "efgc/transfer/transfer.hpp"
#include "recorder.hpp"

namespace efgc::checks {

namespace {

RingValue iv(const Ring& k, long n) { return RingValue::from_int(k, n); }

EFG additive_zero(const Ring& k, const FinAbGroup& a, int N) {
  return additive(k, a, std::vector<RingValue>(a.order(), RingValue::zero(k)), N);
}

bool divisible(const Poly& a, const Poly& b) { return poly_mod(a, b).is_zero(); }

const std::vector<std::vector<int>>& theorem_groups() {
  static const std::vector<std::vector<int>> g = {{2}, {3}, {4}, {2, 2}, {6}, {2, 4}, {2, 2, 2}};
  return g;
}

std::vector<std::vector<GroupElement>> automorphisms(const FinAbGroup& g) {
  std::vector<std::vector<GroupElement>> out;
  std::vector<GroupElement> images;
  auto elems = g.elements();
  std::function<void(int)> rec = [&](int j) {
    if (j == g.rank()) {
      if (is_presentation(Subgroup::whole(g), images)) out.push_back(images);
      return;
    }
    for (const auto& x : elems) {
      if (g.element_order(x) != g.factors()[j]) continue;
      images.push_back(x);
      rec(j + 1);
      images.pop_back();
    }
  };
  rec(0);
  return out;
}

GroupElement apply_aut(const FinAbGroup& g, const std::vector<GroupElement>& images, const GroupElement& x) {
  GroupElement y = g.zero();
  for (int j = 0; j < g.rank(); ++j) y = g.add(y, g.scale(images[j], x[j]));
  return y;
}

}  // namespace

void vn_checks(Recorder& rec, const SuiteOptions& opt) {
  std::vector<EFG> models{multiplicative_universal(FinAbGroup({2}), 1),
                          additive_zero(rationals(), FinAbGroup({2}), 1)};
  int top = opt.vn_max;
  for (const auto& e : models) {
    const Ring& k = e.base();
    for (long n = 1; n <= top; ++n) {
      Poly vn = vn_poly(e, n), wn = wn_poly(e, n), xn = xn_poly(e, n);
      std::string ctx = e.name() + " n=" + std::to_string(n);
      rec.run("vn_square_congruence", [&] { return divisible(vn * vn - vn * iv(k, n), xn); }, ctx);
      for (long m = 1; m <= top; ++m) {
        Poly vm = vn_poly(e, m), wm = wn_poly(e, m), xm = xn_poly(e, m);
        std::string c2 = ctx + " m=" + std::to_string(m);
        rec.run("vn_product", [&] { return vn_poly(e, n * m) == vn * vm.compose(xn); }, c2);
        rec.run("vn_antisymmetry", [&] {
          Poly lhs = vn * vn * wm.compose(xn) - vm * vm * wn.compose(xm);
          Poly mid = wm * iv(k, n) - wn * iv(k, m);
          return lhs == mid && mid == vn * wm - vm * wn;
        }, c2);
        if (std::gcd(n, m) != 1) continue;
        rec.run("vn_coprime", [&] { return divisible(vn - vn.compose(xm), xn); }, c2);
        rec.run("vn_bicyclic", [&] {
          return divisible(vn_poly(e, n * m) - vn.compose(xm) * vm.compose(xn), xn_poly(e, n * m));
        }, c2);
      }
    }
  }
  for (auto f : theorem_groups()) {
    EFG m = multiplicative_universal(FinAbGroup(f), 2);
    for (const auto& al : m.group().elements())
      for (long n = 1; n <= top; ++n) {
        std::string ctx = m.group().describe() + " " + m.group().label(al) + " n=" + std::to_string(n);
        rec.run("vn_series_matches_recursion",
                [&] { return vn_poly(m, n).eval(m.point(al)) == vn_at_point(m, n, al); }, ctx);
        if (!m.group().is_zero(m.group().scale(al, n))) continue;
        rec.run("vn_negation_at_torsion",
                [&] { return vn_at_point(m, -n, al) == -vn_at_point(m, n, m.group().neg(al)); }, ctx);
      }
  }
  // x' = x g(x) with g a unit of R: v'_n = v_n g(x_n) / g(x).
  Rng rng(opt.seed ^ 0xc0);
  Ring q = rationals(), f7 = prime_field(7);
  std::vector<EFG> cm{multiplicative_universal(FinAbGroup({2}), 2, q), multiplicative_universal(FinAbGroup({3}), 2, q),
                      multiplicative_universal(FinAbGroup({4}), 1, q),
                      product_over_field(f7, FinAbGroup({3}), {iv(f7, 1), iv(f7, 2), iv(f7, 4)}, 2)};
  int done = 0;
  for (int trial = 0; done < opt.coordinate_changes && trial < 20 * opt.coordinate_changes; ++trial) {
    const EFG& e = cm[trial % cm.size()];
    const Curve& C = e.curve();
    const Ring& k = e.base();
    std::vector<RingValue> gc{iv(k, uniform(rng, 1, 5))};
    for (int i = 1; i <= 3; ++i)
      gc.push_back(RingValue::from_rational(k, mpq_class(uniform(rng, -4, 4), uniform(rng, 1, 3))));
    Poly g(k, gc);
    auto ginv = try_inverse(C.element(g));
    if (!ginv) continue;
    ++done;
    rec.run("vn_coordinate_invariance", [&] {
      for (long n = 1; n <= top; ++n) {
        RingValue vp = C.element(vn_poly(e, n) * g.compose(xn_poly(e, n))) * *ginv;
        for (const auto& al : e.group().elements()) {
          if (!e.group().is_zero(e.group().scale(al, n))) continue;
          if (C.eval_at_point(vp, e.point(al)) != vn_at_point(e, n, al)) return false;
        }
      }
      return true;
    }, e.name() + " g=" + g.to_string());
  }
}

void k_theory_checks(Recorder& rec, const SuiteOptions&) {
  EFG m = multiplicative_universal(FinAbGroup({2}), 1);
  const Ring& k = m.base();
  RingValue one_plus_v = RingValue::from_coeffs(k, {iv(integers(), 1), iv(integers(), 1)});
  rec.run("k_theory_transfer", [&] { return transfer_element(m, Subgroup::whole(m.group())) == one_plus_v; });
  rec.run("k_theory_eta_square", [&] {
    RingValue e1 = eta_burnside(m, BurnsideElement::basis(Subgroup::trivial(m.group())));
    auto b1 = BurnsideElement::basis(Subgroup::trivial(m.group()));
    return e1 == one_plus_v && e1 * e1 == e1 * iv(k, 2) && burnside_mul(b1, b1) == b1 * mpz_class(2) &&
           eta_burnside(m, burnside_mul(b1, b1)) == e1 * e1;
  });
}

void transfer_theorem_checks(Recorder& rec, const SuiteOptions&) {
  for (auto f : theorem_groups()) {
    FinAbGroup grp(f);
    EFG m = multiplicative_universal(grp, 1);
    EFG z = additive_zero(integers(), grp, 1);
    const Ring& k = m.base();
    auto subs = subgroups_all(grp);
    std::map<Subgroup, RingValue> t;
    for (const auto& u : subs) t.emplace(u, transfer_element(m, u));
    for (const auto& u : subs) {
      std::string ctx = grp.describe() + " U=" + u.label();
      rec.run("transfer_a_zero_phi", [&] { return transfer_element(z, u) == iv(integers(), u.order()); }, ctx);
      rec.run("transfer_presentation_independence", [&] {
        for (const auto& p : presentations_enumerate(u, 100000))
          if (transfer_element(m, u, p) != t.at(u)) return false;
        return true;
      }, ctx);
      rec.run("transfer_e_annihilates_ideal", [&] {
        for (const auto& c : transfer_ideal(m, u))
          if (!(t.at(u) * c).is_zero()) return false;
        return true;
      }, ctx);
      for (const auto& v : subs) {
        std::string c2 = ctx + " V=" + v.label();
        Subgroup s = subgroup_sum(u, v), i = subgroup_intersection(u, v);
        rec.run("transfer_g_product", [&] { return t.at(u) * t.at(v) == t.at(s) * iv(k, i.order()); }, c2);
        if (i.order() == 1) rec.run("transfer_b_direct_sum", [&] { return t.at(s) == t.at(u) * t.at(v); }, c2);
        if (u.contains(v))
          rec.run("transfer_f_congruence", [&] {
            return ideal_membership(t.at(u) - t.at(v) * transfer_quotient(m, u, v), transfer_ideal(m, v));
          }, c2);
      }
    }
    for (const auto& th : automorphisms(grp))
      rec.run("transfer_d_isomorphism", [&] {
        for (const auto& u : subs) {
          std::vector<GroupElement> gens;
          for (const auto& x : u.generators()) gens.push_back(apply_aut(grp, th, x));
          std::vector<RingValue> moved(grp.order(), RingValue::zero(integers()));
          for (long i = 0; i < grp.order(); ++i) moved[grp.index(apply_aut(grp, th, grp.element(i)))] = t.at(u).coeffs()[i];
          if (transfer_element(m, Subgroup::generated(grp, gens)) != RingValue::from_coeffs(k, moved)) return false;
        }
        return true;
      }, grp.describe());
    rec.run("eta_ring_map", [&] {
      for (const auto& b : subs)
        for (const auto& c : subs) {
          auto zb = BurnsideElement::basis(b), zc = BurnsideElement::basis(c);
          if (eta_burnside(m, burnside_mul(zb, zc)) != eta_burnside(m, zb) * eta_burnside(m, zc)) return false;
        }
      return true;
    }, grp.describe());
  }
}

void mackey_checks(Recorder& rec, const SuiteOptions&) {
  std::vector<std::vector<int>> groups = {{}, {2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2}};
  for (const auto& f : groups) {
    FinAbGroup grp(f);
    for (const auto& e : {multiplicative_universal(grp, 1), additive_zero(integers(), grp, 1)}) {
      std::vector<AxiomResult> report;
      try {
        report = mackey_verify(mackey_build(e));
      } catch (const Error& err) {
        rec.record("mackey_build", false, e.name() + " " + grp.describe() + ": " + err.what());
        continue;
      }
      for (const auto& r : report)
        rec.record("mackey_" + r.axiom, r.pass, e.name() + " " + grp.describe() + " " + r.chain);
    }
  }
}

void idempotent_checks(Recorder& rec, const SuiteOptions&) {
  Ring q = rationals();
  std::vector<EFG> models;
  for (auto f : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}}) {
    models.push_back(multiplicative_universal(FinAbGroup(f), 1, q));
    models.push_back(multiplicative_universal(FinAbGroup(f), 2, q));
    models.push_back(additive_zero(q, FinAbGroup(f), 1));
  }
  models.push_back(product_over_field(q, FinAbGroup({2}), {iv(q, 1), iv(q, -1)}, 2));
  for (const auto& e : models)
    rec.run("split_idempotents", [&] {
      for (const auto& [al, eps] : split_idempotents(e))
        if (eps * eps != eps || !verify_split(e.negate(e.point(al)), eps)) return false;
      return true;
    }, e.name() + " " + e.group().describe());
}

void counterexample_checks(Recorder& rec, const SuiteOptions& opt) {
  for (int K = 0; K <= opt.counterexample_K; ++K) {
    int M = 1 << (K + 1);
    int N = K == opt.counterexample_K ? opt.counterexample_N : (1 << K) + 1;
    std::string ctx = "K=" + std::to_string(K) + " N=" + std::to_string(N);
    EFG e = counterexample(N);
    RingValue fk = counterexample_fK(e, K);
    rec.record("counterexample_fK_nonzero", !fk.is_zero(), ctx);
    for (int a = 0; a < 2; ++a)
      rec.run("counterexample_expansion_vanishes", [&] {
        return apply_to_representative(formal_expansion_unchecked(e, {a}, M), e.curve().poly_of(fk)).is_zero();
      }, ctx + " alpha=" + std::to_string(a));
    // the same statement with every substitution legality-checked
    EFG big = counterexample(M + opt.work_precision);
    RingValue fb = counterexample_fK(big, K);
    rec.record("counterexample_fK_nonzero_confirmed", !fb.is_zero(), ctx);
    for (int a = 0; a < 2; ++a)
      rec.run("counterexample_expansion_confirmed",
              [&] { return apply(big.curve(), formal_expansion_at(big, {a}, M), fb).is_zero(); },
              "K=" + std::to_string(K) + " N=" + std::to_string(M + opt.work_precision));
  }
}

}  // namespace efgc::checks
