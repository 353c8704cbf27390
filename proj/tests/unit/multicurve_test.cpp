#include <gtest/gtest.h>

#include "efgc/multicurve/efg.hpp"
#include "test_util.hpp"

namespace efgc {
namespace {

using testing::iv;

// a + b v in Z[v]/(v^2 - 1)
RingValue zv(const Ring& k, long a, long b) { return RingValue::from_coeffs(k, {iv(integers(), a), iv(integers(), b)}); }

std::vector<EFG> builtin_models() {
  std::vector<EFG> out;
  for (auto f : std::vector<std::vector<int>>{{}, {2}, {3}, {4}, {2, 2}, {6}, {2, 4}, {2, 2, 2}})
    out.push_back(multiplicative_universal(FinAbGroup(f), 1));
  out.push_back(multiplicative_universal(FinAbGroup({2}), 3));
  out.push_back(multiplicative_universal(FinAbGroup({3}), 2, rationals()));
  Ring f7 = prime_field(7);
  out.push_back(product_over_field(f7, FinAbGroup({3}), {iv(f7, 1), iv(f7, 2), iv(f7, 4)}, 2));
  out.push_back(product_over_field(rationals(), FinAbGroup({2}), {iv(rationals(), 1), iv(rationals(), -1)}, 3));
  for (auto f : std::vector<std::vector<int>>{{}, {2}, {2, 2}, {2, 4}}) {
    FinAbGroup a(f);
    out.push_back(additive(rationals(), a, std::vector<RingValue>(a.order(), iv(rationals(), 0)), 2));
  }
  Ring f2 = prime_field(2);
  out.push_back(additive(f2, FinAbGroup({2}), {iv(f2, 0), iv(f2, 1)}, 2));
  out.push_back(counterexample(3));
  return out;
}

TEST(Models, MultiplicativeZ2) {
  EFG e = multiplicative_universal(FinAbGroup({2}), 1);
  const Ring& k = e.base();
  const Curve& C = e.curve();
  EXPECT_EQ(C.f(), Poly(k, {zv(k, 0, 0), zv(k, -1, 1), zv(k, 1, 0)}));
  EXPECT_EQ(e.point({1}), zv(k, 1, -1));
  EXPECT_EQ(C.poly_of(e.iota()), Poly(k, {zv(k, 0, 0), zv(k, 0, -1)}));
  // oracle for iota independent of its construction: (1 - x) iota = -x
  EXPECT_EQ((RingValue::one(C.ring()) - C.x()) * e.iota(), -C.x());
  EXPECT_EQ(e.norm_unit(), C.constant(zv(k, 0, 1)));
}

TEST(Models, MultiplicativeIotaAtHigherTruncation) {
  EFG e = multiplicative_universal(FinAbGroup({2, 2}), 3);
  const Curve& C = e.curve();
  EXPECT_EQ((RingValue::one(C.ring()) - C.x()) * e.iota(), -C.x());
}

TEST(Models, AdditiveTrivialGroup) {
  EFG e = additive(rationals(), FinAbGroup(std::vector<int>{}), {iv(rationals(), 0)}, 3);
  EXPECT_EQ(e.curve().f(), Poly::x(rationals()));
  EXPECT_EQ(e.curve().rank(), 3);
}

TEST(Models, Counterexample) {
  EFG e = counterexample(17);
  const Ring& k = e.base();
  SquareZeroElem el;
  el.poly = {2};
  RingValue eps = RingValue::from_square_zero(k, el);
  EXPECT_EQ(e.curve().f(), Poly(k, {iv(k, 0), eps, iv(k, 1)}));
}

TEST(Models, AllBuiltinsValidate) {
  for (const auto& e : builtin_models()) {
    auto rep = validate_efg(e);
    EXPECT_TRUE(rep.all_pass()) << e.name() << " " << e.group().describe() << ": " << rep.first_failure();
  }
}

TEST(Models, RejectsNonHomomorphism) {
  Ring q = rationals();
  EXPECT_THROW(multiplicative(q, FinAbGroup({2}), {iv(q, 1), iv(q, 2)}, 1), Error);
  EXPECT_THROW(product_over_field(q, FinAbGroup({2}), {iv(q, 1), iv(q, 1)}, 1), Error);
  // points that do not add up
  Ring f3 = prime_field(3);
  EXPECT_THROW(additive(f3, FinAbGroup({3}), {iv(f3, 0), iv(f3, 1), iv(f3, 1)}, 1), Error);
}

TEST(Validate, TamperedSigmaFailsHomomorphism) {
  EFG e = multiplicative_universal(FinAbGroup({2}), 1);
  const Ring& k = e.base();
  MPoly x0 = MPoly::variable(k, 2, 0), x1 = MPoly::variable(k, 2, 1);
  auto rep = validate_efg(e.with_sigma(x0 + x1 + x0 * x1));
  bool saw = false;
  for (const auto& c : rep.checks)
    if (c.name == "phi_homomorphism") {
      saw = true;
      EXPECT_FALSE(c.pass);
    }
  EXPECT_TRUE(saw);
  EXPECT_FALSE(rep.all_pass());
}

TEST(Validate, NonAssociativeSigmaFails) {
  EFG e = additive(rationals(), FinAbGroup(std::vector<int>{}), {iv(rationals(), 0)}, 4);
  const Ring& k = e.base();
  MPoly x0 = MPoly::variable(k, 2, 0), x1 = MPoly::variable(k, 2, 1);
  auto rep = validate_efg(e.with_sigma(x0 + x1 + x0 * x0 * x1 + x0 * x1 * x1));
  for (const auto& c : rep.checks)
    if (c.name == "sigma_associative") EXPECT_FALSE(c.pass);
}

TEST(Eval, Examples) {
  EFG e = multiplicative_universal(FinAbGroup({2}), 1);
  const Curve& C = e.curve();
  const Ring& k = e.base();
  RingValue c = e.point({1});
  EXPECT_TRUE(C.eval_at_point(C.y(), c).is_zero());
  EXPECT_EQ(C.eval_at_point(C.x() * C.x(), c), zv(k, 2, -2));
  EXPECT_EQ(C.eval_at_point(C.constant(zv(k, 3, 5)), c), zv(k, 3, 5));
  EXPECT_THROW(C.eval_at_point(C.x(), zv(k, 2, 0)), Error);
}

TEST(Eval, PointKernelIsLinearIdeal) {
  for (const auto& e : builtin_models()) {
    const Curve& C = e.curve();
    if (C.rank() > 12) continue;
    for (const auto& c : e.points()) {
      Poly lin(e.base(), {-c, RingValue::one(e.base())});
      EXPECT_TRUE(C.eval_at_point(C.element(lin), c).is_zero());
      RingValue xi = RingValue::one(C.ring());
      for (int i = 0; i < C.rank(); ++i) {
        Poly rem = poly_mod(C.poly_of(xi), lin);
        EXPECT_EQ(rem.coeff(0), C.eval_at_point(xi, c));
        xi *= C.x();
      }
    }
  }
}

TEST(Substitute, Examples) {
  EFG e = multiplicative_universal(FinAbGroup({2}), 2);
  const Curve& C = e.curve();
  EXPECT_EQ(substitute(C, e.sigma(), {C.x(), RingValue::zero(C.ring())}), C.x());
  EXPECT_TRUE(substitute(C, e.sigma(), {C.x(), e.iota()}).is_zero());
  EFG a = additive(rationals(), FinAbGroup(std::vector<int>{}), {iv(rationals(), 0)}, 3);
  RingValue d = difference_function(a);
  MPoly dm = a.curve().tensor_terms(d);
  EXPECT_TRUE(substitute(a.curve(), dm, {a.curve().x(), a.curve().x()}).is_zero());
}

TEST(Substitute, IllegalImageCarriesVanishingPower) {
  EFG e = additive(rationals(), FinAbGroup(std::vector<int>{}), {iv(rationals(), 0)}, 3);
  const Curve& C = e.curve();
  try {
    substitute(C, C.x(), C.constant(iv(rationals(), 1)));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::kIllegalSubstitution);
    EXPECT_EQ(err.detail(), -1);
  }
  // x -> x^... legal; x -> 1 + x is not since f(1+x) = 1+x is a unit
  EXPECT_NO_THROW(substitute(C, C.x(), C.x() * C.x()));
}

TEST(Difference, AdditiveAndMultiplicative) {
  EFG a = additive(rationals(), FinAbGroup({2}), {iv(rationals(), 0), iv(rationals(), 0)}, 2);
  const Curve& Ca = a.curve();
  EXPECT_EQ(difference_function(a), Ca.tensor_x1() - Ca.tensor_x0());

  EFG m = multiplicative_universal(FinAbGroup({2}), 2);
  const Curve& C = m.curve();
  RingValue d = difference_function(m);
  RingValue one = RingValue::one(C.tensor_ring());
  EXPECT_EQ(d * (one - C.tensor_x0()), C.tensor_x1() - C.tensor_x0());
  MPoly dm = C.tensor_terms(d);
  EXPECT_TRUE(substitute(C, dm, {C.x(), C.x()}).is_zero());
}

TEST(XAlpha, Examples) {
  EFG e = multiplicative_universal(FinAbGroup({2}), 1);
  const Curve& C = e.curve();
  const Ring& k = e.base();
  EXPECT_EQ(x_alpha(e, {0}), C.x());
  EXPECT_EQ(C.poly_of(x_alpha(e, {1})), Poly(k, {zv(k, 1, -1), zv(k, 0, 1)}));
  for (const auto& m : builtin_models())
    for (long i = 0; i < m.group().order(); ++i) {
      auto al = m.group().element(i);
      EXPECT_TRUE(m.curve().eval_at_point(x_alpha(m, al), m.point(al)).is_zero());
    }
}

TEST(TopologicalBasis, Examples) {
  EFG e = multiplicative_universal(FinAbGroup({2}), 2);
  const Curve& C = e.curve();
  const Ring& k = e.base();
  auto b = topological_basis(e, 4);
  EXPECT_TRUE(b[0].is_one());
  EXPECT_EQ(b[1], C.x());
  EXPECT_EQ(b[2], C.constant(zv(k, 0, 1)) * C.y());
  EFG a = additive(rationals(), FinAbGroup(std::vector<int>{}), {iv(rationals(), 0)}, 4);
  auto ba = topological_basis(a, 4);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(ba[i], a.curve().x().pow(i));
  EXPECT_THROW(topological_basis(a, 5), Error);
}

TEST(TopologicalBasis, PeriodicityIdentity) {
  for (const auto& e : builtin_models()) {
    const Curve& C = e.curve();
    if (C.rank() > 16) continue;
    int n = C.degree();
    auto b = topological_basis(e, C.rank());
    RingValue uinv = unit_inverse(C.poly_of(e.norm_unit()).coeff(0));
    for (int j = 0; j < C.truncation(); ++j)
      for (int kk = 0; kk < n; ++kk)
        EXPECT_EQ(b[n * j + kk], C.constant(uinv.pow(j)) * C.y().pow(j) * b[kk]) << e.name();
  }
}

TEST(Translation, Examples) {
  EFG e = multiplicative_universal(FinAbGroup({2}), 2);
  const Curve& C = e.curve();
  const Ring& k = e.base();
  EXPECT_EQ(translation(e, {0}).image, C.x());
  EXPECT_EQ(C.poly_of(translation(e, {1}).image), Poly(k, {zv(k, 1, -1), zv(k, 0, 1)}));
  auto t = translation(e, {1});
  for (int i = 0; i < C.rank(); ++i) {
    RingValue xi = C.x().pow(i);
    EXPECT_EQ(apply(C, t, apply(C, t, xi)), xi);
  }
}

TEST(Translation, ComposesAlongTheGroup) {
  for (auto f : std::vector<std::vector<int>>{{3}, {2, 2}}) {
    EFG e = multiplicative_universal(FinAbGroup(f), 2);
    const Curve& C = e.curve();
    const FinAbGroup& A = e.group();
    for (const auto& a : A.elements())
      for (const auto& b : A.elements()) {
        auto ta = translation(e, a), tb = translation(e, b), tab = translation(e, A.add(a, b));
        RingValue xi = RingValue::one(C.ring());
        for (int i = 0; i < C.rank(); ++i) {
          EXPECT_EQ(apply(C, ta, apply(C, tb, xi)), apply(C, tab, xi));
          xi *= C.x();
        }
      }
  }
}

TEST(FormalExpansion, CounterexampleImages) {
  EFG e = counterexample(8);
  const Ring& k = e.base();
  SquareZeroElem el;
  el.poly = {2};
  RingValue eps = RingValue::from_square_zero(k, el);
  auto l0 = formal_expansion_at(e, {0}, 8);
  RingValue t = RingValue::generator(l0.target);
  EXPECT_EQ(l0.image, t);
  EXPECT_EQ(apply(e.curve(), l0, e.curve().y()), t * t + embed(eps, l0.target) * t);
  auto la = formal_expansion_at(e, {1}, 8);
  EXPECT_EQ(la.image, t + embed(eps, la.target));
  EXPECT_THROW(formal_expansion_at(e, {0}, 9), Error);
}

TEST(FormalExpansion, AdditiveIdentity) {
  EFG a = additive(rationals(), FinAbGroup(std::vector<int>{}), {iv(rationals(), 0)}, 5);
  auto m = formal_expansion_at(a, {}, 5);
  EXPECT_EQ(m.image, RingValue::generator(m.target));
}

TEST(Counterexample, KernelElementAtTruncation) {
  for (int K = 0; K <= 4; ++K) {
    int M = 1 << (K + 1);
    for (int N : {(1 << K) + 1, M}) {
      EFG e = counterexample(N);
      RingValue fk = counterexample_fK(e, K);
      EXPECT_FALSE(fk.is_zero());
      for (int a = 0; a < 2; ++a) {
        auto m = formal_expansion_unchecked(e, {a}, M);
        EXPECT_TRUE(apply_to_representative(m, e.curve().poly_of(fk)).is_zero()) << K << " " << N;
        if (N >= M) EXPECT_TRUE(apply(e.curve(), formal_expansion_at(e, {a}, M), fk).is_zero());
      }
    }
  }
}

TEST(Counterexample, TelescopingNeedsPositiveIndices) {
  // With indices u_(1 - 2^(k+1)) read as u_(2^(k+1) - 1) the images vanish;
  // shifting every index by one leaves u_(2^(K+1)) t^(2^(K+1)) - ... nonzero.
  EFG e = counterexample(32);
  const Curve& C = e.curve();
  RingValue shifted = RingValue::zero(C.ring());
  for (int k = 0; k <= 2; ++k) {
    SquareZeroElem u;
    u.module = {1 << (k + 1)};
    shifted += C.constant(RingValue::from_square_zero(e.base(), u)) * C.y().pow(1UL << k);
  }
  auto m = formal_expansion_at(e, {0}, 8);
  EXPECT_FALSE(apply(C, m, shifted).is_zero());
}

TEST(Regularity, CompletionCriterion) {
  EFG e = multiplicative_universal(FinAbGroup({2}), 3);
  const Curve& C = e.curve();
  EXPECT_TRUE(C.regular_in_completion(C.x()));
  EXPECT_TRUE(C.regular_in_completion(C.y()));
  EXPECT_FALSE(C.regular_in_completion(RingValue::zero(C.ring())));
  // 1 - v kills 1 + v, so the constant 1 + v is a zero divisor
  EXPECT_FALSE(C.regular_in_completion(C.constant(zv(e.base(), 1, 1))));
  EXPECT_TRUE(counterexample(5).curve().regular_in_completion(counterexample(5).curve().x()));
}

TEST(Regularity, InverseOfLinear) {
  EFG e = multiplicative_universal(FinAbGroup({3}), 2);
  const Curve& C = e.curve();
  RingValue one = RingValue::one(e.base());
  RingValue inv = C.inverse_of_linear(one);
  EXPECT_TRUE(((C.constant(one) - C.x()) * inv).is_one());
  EXPECT_THROW(C.inverse_of_linear(RingValue::zero(e.base())), Error);
}

}  // namespace
}  // namespace efgc
