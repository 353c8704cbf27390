#include <gtest/gtest.h>

#include "efgc/resdual/resdual.hpp"
#include "test_util.hpp"

namespace efgc {
namespace {

using testing::iv;
using testing::Rng;

Poly P(const Ring& r, const std::vector<long>& c) { return Poly::from_ints(r, c); }

std::vector<Ring> residue_menu() {
  return {integers(), rationals(), prime_field(5), integers_mod(6), testing::z_c2()};
}

TEST(Residue, Examples) {
  Ring q = rationals();
  EXPECT_TRUE(residue(P(q, {1}), P(q, {0, 1})).is_one());
  EXPECT_TRUE(residue(P(q, {0, 1}), P(q, {-1, 0, 1})).is_one());
  EXPECT_EQ(residue(P(q, {0, 2}), P(q, {-1, 0, 1})), iv(q, 2));
  EXPECT_TRUE(residue(P(q, {1, 2, 3}), P(q, {1})).is_zero());
  EXPECT_THROW(residue(P(q, {1}), P(q, {0, 2})), Error);
}

TEST(Residue, MatchesPartialFractions) {
  // For q with distinct rational roots r_i, res(p dx/q) = sum p(r_i)/q'(r_i).
  Ring q = rationals();
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    int n = static_cast<int>(testing::uniform(rng, 1, 5));
    std::vector<long> roots;
    while (static_cast<int>(roots.size()) < n) {
      long r = testing::uniform(rng, -6, 6);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    Poly den = P(q, {1});
    for (long r : roots) den = den * P(q, {-r, 1});
    Poly num = testing::random_poly(q, static_cast<int>(testing::uniform(rng, 0, 8)), rng);
    RingValue expect = RingValue::zero(q);
    for (long r : roots) {
      RingValue rv = iv(q, r);
      expect += num.eval(rv) * unit_inverse(den.derivative().eval(rv));
    }
    EXPECT_EQ(residue(num, den), expect);
  }
}

TEST(Residue, DerivativeExamples) {
  Ring q = rationals();
  EXPECT_TRUE(residue_of_derivative(P(q, {1}), P(q, {0, 1})).is_zero());
  EXPECT_TRUE(residue_of_derivative(P(q, {0, 0, 1}), P(q, {-1, 1})).is_zero());
  EXPECT_TRUE(residue_of_derivative(P(q, {3, 1, 4, 1}), P(q, {1})).is_zero());
}

TEST(Residue, RandomizedIdentities) {
  Rng rng(11);
  for (const auto& k : residue_menu()) {
    for (int t = 0; t < 300; ++t) {
      Poly p = testing::random_poly(k, static_cast<int>(testing::uniform(rng, 0, 8)), rng);
      Poly q = testing::random_poly(k, static_cast<int>(testing::uniform(rng, 0, 8)), rng, true);
      EXPECT_TRUE(residue(p, P(k, {1})).is_zero());
      EXPECT_TRUE(residue_of_derivative(p, q).is_zero()) << k->describe() << " " << p.to_string() << " / " << q.to_string();
      EXPECT_EQ(residue(q.derivative(), q), RingValue::from_int(k, q.degree()));
      if (q.degree() >= 1) EXPECT_EQ(residue(p * q.derivative(), q), trace_of_multiplication(p, q));
    }
  }
}

TEST(Trace, Examples) {
  Ring q = rationals();
  EXPECT_EQ(trace_of_multiplication(P(q, {1}), P(q, {1, 2, 0, 1})), iv(q, 3));
  EXPECT_TRUE(trace_of_multiplication(P(q, {0, 1}), P(q, {-1, 0, 1})).is_zero());
  EXPECT_TRUE(trace_of_multiplication(P(q, {0, 1}), P(q, {0, 0, 1})).is_zero());
}

TEST(Duality, EExamples) {
  Ring z = integers();
  auto e2 = DualityAlgebra(P(z, {0, 0, 1})).e();
  MPoly x0 = MPoly::variable(z, 2, 0), x1 = MPoly::variable(z, 2, 1);
  EXPECT_EQ(e2, x0 + x1);
  EXPECT_EQ(DualityAlgebra(P(z, {-1, 0, 1})).e(), x0 + x1);
  EXPECT_EQ(DualityAlgebra(P(z, {0, 0, 0, 1})).e(), x0 * x0 + x0 * x1 + x1 * x1);
}

TEST(Duality, EIsTheDividedDifference) {
  Rng rng(3);
  for (const auto& k : testing::menu_rings()) {
    for (int t = 0; t < 20; ++t) {
      Poly f = testing::random_poly(k, static_cast<int>(testing::uniform(rng, 1, 6)), rng, true);
      DualityAlgebra alg(f);
      MPoly e = alg.e();
      MPoly x0 = MPoly::variable(k, 2, 0), x1 = MPoly::variable(k, 2, 1);
      EXPECT_EQ((x1 - x0) * e, MPoly::from_poly(f, 2, 1) - MPoly::from_poly(f, 2, 0));
      EXPECT_EQ(e.compose({x1, x0}), e);
      // e(x, x) = f'
      MPoly x = MPoly::variable(k, 1, 0);
      EXPECT_EQ(e.compose({x, x}), MPoly::from_poly(f.derivative(), 1, 0));
    }
  }
}

TEST(Duality, Theta0Examples) {
  Ring z = integers();
  DualityAlgebra alg(P(z, {0, 0, 1}));
  EXPECT_EQ(alg.theta0(alg.basis_functional(0)), P(z, {0, 1}));
  EXPECT_EQ(alg.theta0(alg.basis_functional(1)), P(z, {1}));
  EXPECT_TRUE(alg.theta0(alg.zero_functional()).is_zero());
  Matrix m = alg.theta0_matrix();
  EXPECT_TRUE(m(0, 0).is_zero());
  EXPECT_TRUE(m(0, 1).is_one());
  EXPECT_TRUE(m(1, 0).is_one());
  EXPECT_TRUE(m(1, 1).is_zero());
  EXPECT_TRUE(det_division_free(m).is_minus_one());
  EXPECT_EQ(alg.theta0_inverse(P(z, {1})), alg.basis_functional(1));
  EXPECT_EQ(alg.theta0_inverse(Poly(z)), alg.zero_functional());
}

TEST(Duality, InverseAgreesWithAdjugateSolve) {
  Rng rng(5);
  for (const auto& k : testing::menu_rings()) {
    for (int t = 0; t < 20; ++t) {
      int r = static_cast<int>(testing::uniform(rng, 1, 6));
      DualityAlgebra alg(testing::random_poly(k, r, rng, true));
      Matrix m = alg.theta0_matrix();
      RingValue det = det_division_free(m);
      ASSERT_TRUE(det.is_one() || det.is_minus_one());
      Matrix adj = adjugate(m);
      Poly target = testing::random_poly(k, r - 1, rng);
      Functional phi = alg.theta0_inverse(target);
      for (int i = 0; i < r; ++i) {
        RingValue v = RingValue::zero(k);
        for (int j = 0; j < r; ++j) v += adj(i, j) * target.coeff(j);
        EXPECT_EQ(phi.values[i], v * det);
      }
      EXPECT_EQ(alg.theta0(phi), alg.reduce(target));
    }
  }
}

TEST(Duality, CubicRoundTrip) {
  Ring z = integers();
  DualityAlgebra alg(P(z, {-2, 0, 0, 1}));
  Rng rng(9);
  for (int t = 0; t < 50; ++t) {
    Functional phi{{testing::random_value(z, rng), testing::random_value(z, rng), testing::random_value(z, rng)}};
    EXPECT_EQ(alg.theta0_inverse(alg.theta0(phi)), phi);
  }
}

TEST(Duality, EpsilonExamples) {
  Ring z = integers();
  DualityAlgebra alg(P(z, {0, 0, 1}));
  Functional psi = alg.psi();
  EXPECT_TRUE(psi.values[0].is_zero());
  EXPECT_TRUE(psi.values[1].is_one());
  EXPECT_EQ(alg.epsilon_contraction(), P(z, {1}));
  EXPECT_TRUE(alg.epsilon(alg.theta0(alg.basis_functional(0))).is_one());
  EXPECT_TRUE(alg.epsilon(alg.theta0(alg.basis_functional(1))).is_zero());
}

TEST(Duality, RandomizedContracts) {
  Rng rng(13);
  for (const auto& k : residue_menu()) {
    for (int t = 0; t < 40; ++t) {
      int r = static_cast<int>(testing::uniform(rng, 1, 8));
      Poly f = testing::random_poly(k, r, rng, true);
      DualityAlgebra alg(f);
      EXPECT_EQ(alg.epsilon_contraction(), P(k, {1}));
      EXPECT_EQ(alg.theta0(alg.trace_functional()), alg.reduce(f.derivative()));
      for (int j = 0; j < r; ++j)
        EXPECT_EQ(alg.epsilon(alg.theta0(alg.basis_functional(j))), j == 0 ? iv(k, 1) : iv(k, 0));
      Functional phi = alg.zero_functional();
      for (auto& v : phi.values) v = testing::random_value(k, rng);
      auto [res, val] = residue_pairing_check(alg, phi);
      EXPECT_EQ(res, val);
      Poly g = testing::random_poly(k, static_cast<int>(testing::uniform(rng, 0, 3)), rng, true);
      auto [lhs, rhs] = residue_inclusion_check(f, f * g, phi);
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(Duality, PairingExamples) {
  Ring z = integers();
  DualityAlgebra alg(P(z, {0, 0, 1}));
  auto p0 = residue_pairing_check(alg, alg.basis_functional(0));
  EXPECT_TRUE(p0.first.is_one() && p0.second.is_one());
  auto p1 = residue_pairing_check(alg, alg.basis_functional(1));
  EXPECT_TRUE(p1.first.is_zero() && p1.second.is_zero());
  Ring f5 = prime_field(5);
  DualityAlgebra a5(P(f5, {0, -1, 0, 1}));
  auto p2 = residue_pairing_check(a5, a5.basis_functional(2));
  EXPECT_EQ(p2.first, p2.second);
}

TEST(Duality, InclusionExamples) {
  Ring q = rationals();
  DualityAlgebra a0(P(q, {0, 1}));
  auto r = residue_inclusion_check(P(q, {0, 1}), P(q, {0, 0, 1}), a0.basis_functional(0));
  EXPECT_TRUE(r.first.is_one() && r.second.is_one());
  DualityAlgebra a1(P(q, {-1, 1}));
  auto s = residue_inclusion_check(P(q, {-1, 1}), P(q, {2, -3, 1}), a1.basis_functional(0));
  EXPECT_EQ(s.first, s.second);
  auto z = residue_inclusion_check(P(q, {-1, 1}), P(q, {2, -3, 1}), a1.zero_functional());
  EXPECT_TRUE(z.first.is_zero() && z.second.is_zero());
  EXPECT_THROW(residue_inclusion_check(P(q, {-1, 1}), P(q, {0, 0, 1}), a1.basis_functional(0)), Error);
}

}  // namespace
}  // namespace efgc
