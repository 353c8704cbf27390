#include <gtest/gtest.h>

#include <set>

#include "efgc/ringkit/linalg.hpp"
#include "efgc/ringkit/matrix.hpp"
#include "efgc/ringkit/mpoly.hpp"
#include "efgc/ringkit/poly.hpp"
#include "test_util.hpp"

namespace efgc {
namespace {

using testing::iv;
using testing::Rng;

Matrix from_rows(const Ring& r, const std::vector<std::vector<long>>& rows) {
  Matrix m(r, static_cast<long>(rows.size()), static_cast<long>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = iv(r, rows[i][j]);
  return m;
}

TEST(Determinant, TwoByTwoIsAdMinusBc) {
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    long a = testing::uniform(rng, -9, 9), b = testing::uniform(rng, -9, 9);
    long c = testing::uniform(rng, -9, 9), d = testing::uniform(rng, -9, 9);
    Matrix m = from_rows(integers(), {{a, b}, {c, d}});
    EXPECT_EQ(det_division_free(m), iv(integers(), a * d - b * c));
    EXPECT_EQ(det_berkowitz(m), iv(integers(), a * d - b * c));
  }
}

TEST(Determinant, IdentityOverZ6) {
  EXPECT_TRUE(det_division_free(Matrix::identity(integers_mod(6), 3)).is_one());
}

TEST(Determinant, SmallMatrixOverZ4) {
  Matrix m = from_rows(integers_mod(4), {{2, 1}, {3, 2}});
  EXPECT_TRUE(det_division_free(m).is_one());
}

TEST(Determinant, BerkowitzAgreesWithPermutationExpansion) {
  Rng rng(2);
  for (const Ring& r : testing::menu_rings()) {
    if (r->kind() == RingKind::kSquareZeroF2) continue;
    for (long n = 0; n <= 5; ++n) {
      Matrix m = testing::random_matrix(r, n, rng);
      EXPECT_EQ(det_berkowitz(m), det_permutation(m)) << r->describe() << " n=" << n;
    }
  }
}

TEST(Determinant, Multiplicative) {
  Rng rng(3);
  for (const Ring& r : testing::menu_rings()) {
    for (long n = 1; n <= 4; ++n) {
      Matrix a = testing::random_matrix(r, n, rng);
      Matrix b = testing::random_matrix(r, n, rng);
      EXPECT_EQ(det_division_free(a * b), det_division_free(a) * det_division_free(b)) << r->describe();
    }
  }
}

TEST(Determinant, NonSquareRejected) {
  Matrix m(integers(), 2, 3);
  try {
    det_division_free(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimensionMismatch);
  }
}

TEST(Adjugate, OneByOneAndTwoByTwo) {
  Matrix one = from_rows(integers(), {{7}});
  EXPECT_EQ(adjugate(one), from_rows(integers(), {{1}}));
  Matrix m = from_rows(integers(), {{1, 2}, {3, 4}});
  EXPECT_EQ(adjugate(m), from_rows(integers(), {{4, -2}, {-3, 1}}));
}

TEST(Adjugate, TimesMatrixIsDeterminantTimesIdentity) {
  Rng rng(4);
  std::vector<Ring> rings = testing::menu_rings();
  rings.push_back(integers_mod(9));
  for (const Ring& r : rings) {
    for (long n = 1; n <= 6; ++n) {
      Matrix m = testing::random_matrix(r, n, rng);
      Matrix lhs = adjugate(m) * m;
      Matrix rhs = Matrix::identity(r, n);
      RingValue d = det_division_free(m);
      for (long i = 0; i < n; ++i) rhs(i, i) = d;
      EXPECT_EQ(lhs, rhs) << r->describe() << " n=" << n;
    }
  }
}

TEST(PolyDivmod, Examples) {
  Ring z = integers();
  auto [q1, r1] = poly_divmod(Poly::from_ints(z, {1, 0, 0, 1}), Poly::from_ints(z, {0, 0, 1}));
  EXPECT_EQ(q1, Poly::from_ints(z, {0, 1}));
  EXPECT_EQ(r1, Poly::from_ints(z, {1}));
  Ring q = rationals();
  auto [q2, r2] = poly_divmod(Poly::from_ints(q, {-1, 0, 1}), Poly::from_ints(q, {-1, 1}));
  EXPECT_EQ(q2, Poly::from_ints(q, {1, 1}));
  EXPECT_TRUE(r2.is_zero());
  Ring z4 = integers_mod(4);
  auto [q3, r3] = poly_divmod(Poly::from_ints(z4, {0, 0, 1}), Poly::from_ints(z4, {2, 1}));
  EXPECT_EQ(q3, Poly::from_ints(z4, {2, 1}));
  EXPECT_TRUE(r3.is_zero());
}

TEST(PolyDivmod, NonUnitLeadingCoefficient) {
  Ring z = integers();
  try {
    poly_divmod(Poly::from_ints(z, {1, 1, 1}), Poly::from_ints(z, {1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNonUnitLeadingCoefficient);
  }
}

TEST(PolyDivmod, RoundTripRandom) {
  Rng rng(5);
  for (const Ring& r : testing::menu_rings()) {
    for (int t = 0; t < 1000; ++t) {
      Poly num = testing::random_poly(r, static_cast<int>(testing::uniform(rng, 0, 9)), rng);
      Poly den = testing::random_poly(r, static_cast<int>(testing::uniform(rng, 0, 5)), rng, true);
      if (t % 3 == 0 && r->kind() != RingKind::kSquareZeroF2) {
        // unit leading coefficient other than 1
        std::vector<RingValue> cs = den.coeffs();
        cs.back() = -RingValue::one(r);
        den = Poly(r, cs);
      }
      auto [q, rem] = poly_divmod(num, den);
      EXPECT_EQ(q * den + rem, num);
      EXPECT_LT(rem.degree(), den.degree());
    }
  }
}

TEST(Units, Examples) {
  Ring g = testing::z_c2();
  RingValue one = RingValue::one(g);
  RingValue v = RingValue::group_basis(g, 1);
  EXPECT_TRUE(is_unit(one));
  EXPECT_FALSE(is_unit(one + v));
  EXPECT_TRUE(is_unit(v));
  EXPECT_EQ(unit_inverse(v), v);
  try {
    is_unit(RingValue::one(square_zero_f2()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnsupportedRing);
  }
}

TEST(Units, InverseMultipliesToOne) {
  Rng rng(6);
  for (const Ring& r : testing::menu_rings()) {
    for (int t = 0; t < 60; ++t) {
      RingValue a = testing::random_value(r, rng);
      auto inv = try_inverse(a);
      EXPECT_EQ(inv.has_value(), is_unit(a)) << a;
      if (inv) EXPECT_TRUE((a * *inv).is_one()) << a;
    }
  }
}

TEST(Regular, Examples) {
  Ring g = testing::z_c2();
  RingValue v = RingValue::group_basis(g, 1);
  EXPECT_TRUE(is_regular(v));
  EXPECT_FALSE(is_regular(RingValue::one(g) + v));
  EXPECT_TRUE(is_regular(iv(g, 2)));
}

TEST(Regular, AgreesWithBruteForceOverZm) {
  for (long m = 2; m <= 30; ++m) {
    Ring r = integers_mod(m);
    for (long a = 0; a < m; ++a) {
      bool brute = true;
      for (long s = 1; s < m; ++s)
        if ((a * s) % m == 0) brute = false;
      EXPECT_EQ(is_regular(iv(r, a)), brute) << "m=" << m << " a=" << a;
    }
  }
}

TEST(Regular, AgreesWithBruteForceOverQuotientOfZ4) {
  Ring z4 = integers_mod(4);
  Ring r = poly_quotient(z4, {iv(z4, 2), iv(z4, 0), iv(z4, 1)}, "t");  // t^2 = 2
  std::vector<RingValue> all;
  for (long a = 0; a < 4; ++a)
    for (long b = 0; b < 4; ++b) all.push_back(RingValue::from_coeffs(r, {iv(z4, a), iv(z4, b)}));
  for (const auto& x : all) {
    bool brute = true;
    for (const auto& y : all)
      if (!y.is_zero() && (x * y).is_zero()) brute = false;
    EXPECT_EQ(is_regular(x), brute) << x;
  }
}

TEST(Ideal, Examples) {
  Ring g = testing::z_c2();
  RingValue one = RingValue::one(g);
  RingValue v = RingValue::group_basis(g, 1);
  EXPECT_TRUE(ideal_membership(RingValue::zero(g), {one + v}));
  EXPECT_TRUE(ideal_membership(iv(g, 2), {one - v, one + v}));
  EXPECT_FALSE(ideal_membership(one + v, {one - v}));
}

TEST(Ideal, AgreesWithEnumerationOverZm) {
  for (long m = 2; m <= 24; ++m) {
    Ring r = integers_mod(m);
    for (long g1 = 0; g1 < m; ++g1) {
      for (long g2 = 0; g2 < m; g2 += 3) {
        std::set<long> ideal;
        for (long a = 0; a < m; ++a)
          for (long b = 0; b < m; ++b) ideal.insert((a * g1 + b * g2) % m);
        for (long t = 0; t < m; ++t)
          EXPECT_EQ(ideal_membership(iv(r, t), {iv(r, g1), iv(r, g2)}), ideal.count(t) > 0)
              << m << " " << g1 << " " << g2 << " " << t;
      }
    }
  }
}

TEST(Split, Examples) {
  Ring z = integers();
  EXPECT_TRUE(verify_split(iv(z, 0), iv(z, 0)));
  EXPECT_TRUE(verify_split(iv(z, 1), iv(z, 1)));
  Ring z6 = integers_mod(6);
  EXPECT_TRUE(verify_split(iv(z6, 4), iv(z6, 4)));
  EXPECT_TRUE(verify_split(iv(z6, 2), iv(z6, 4)));
  EXPECT_FALSE(verify_split(iv(z6, 2), iv(z6, 3)));
}

TEST(Kernel, MatchesBruteForceOverZ6) {
  Ring z6 = integers_mod(6);
  Matrix m = from_rows(z6, {{2, 4}, {3, 3}});
  auto ker = kernel_basis(m);
  // brute-force kernel
  std::set<std::pair<long, long>> brute, spanned;
  for (long a = 0; a < 6; ++a)
    for (long b = 0; b < 6; ++b)
      if ((2 * a + 4 * b) % 6 == 0 && (3 * a + 3 * b) % 6 == 0) brute.insert({a, b});
  std::vector<std::pair<long, long>> gens;
  for (auto& k : ker) gens.push_back({k[0].integer().get_si(), k[1].integer().get_si()});
  spanned.insert({0, 0});
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto s : std::set<std::pair<long, long>>(spanned))
      for (auto g : gens) grew |= spanned.insert({(s.first + g.first) % 6, (s.second + g.second) % 6}).second;
  }
  EXPECT_EQ(spanned, brute);
}

TEST(SquareZero, Relations) {
  Ring sz = square_zero_f2();
  auto u = [&](int i) {
    SquareZeroElem e;
    e.module = {i};
    return RingValue::from_square_zero(sz, e);
  };
  SquareZeroElem ee;
  ee.poly = {2};
  RingValue e = RingValue::from_square_zero(sz, ee);
  EXPECT_EQ(e * u(4), u(3));
  EXPECT_TRUE((e * u(1)).is_zero());
  EXPECT_TRUE((u(2) * u(5)).is_zero());
  EXPECT_EQ(e.pow(3) * u(7), u(4));
  EXPECT_TRUE((iv(sz, 2)).is_zero());
  EXPECT_EQ((RingValue::one(sz) + e) * (RingValue::one(sz) + e), RingValue::one(sz) + e * e);
  EXPECT_EQ(e.to_string(), "e");
  EXPECT_EQ((e + u(3)).to_string(), "e+u3");
}

TEST(SquareZero, RingAxiomsRandom) {
  Rng rng(7);
  Ring sz = square_zero_f2();
  for (int t = 0; t < 300; ++t) {
    RingValue a = testing::random_value(sz, rng), b = testing::random_value(sz, rng),
              c = testing::random_value(sz, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(RingAxioms, RandomAcrossMenu) {
  Rng rng(8);
  for (const Ring& r : testing::menu_rings()) {
    for (int t = 0; t < 100; ++t) {
      RingValue a = testing::random_value(r, rng), b = testing::random_value(r, rng),
                c = testing::random_value(r, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_TRUE((a - a).is_zero());
    }
  }
}

TEST(Text, Rendering) {
  Ring g = testing::z_c2();
  RingValue v = RingValue::group_basis(g, 1);
  EXPECT_EQ((RingValue::one(g) + v).to_string(), "1+v");
  EXPECT_EQ((iv(g, 2) - iv(g, 2) * v).to_string(), "2-2*v");
  Poly p(g, {RingValue::one(g), -RingValue::one(g) + v, RingValue::one(g)});
  EXPECT_EQ(p.to_string(), "1 + (-1+v)*x + x^2");
  EXPECT_EQ(Poly::from_ints(integers(), {-1, 0, 3}).to_string(), "-1 + 3*x^2");
  Ring q = rationals();
  EXPECT_EQ(RingValue::from_rational(q, mpq_class(6, 4)).to_string(), "3/2");
}

TEST(MPoly, TruncationAndComposition) {
  Ring z = integers();
  MPoly x0 = MPoly::variable(z, 2, 0, 2), x1 = MPoly::variable(z, 2, 1, 2);
  MPoly p = (x0 + x1).pow(3);
  EXPECT_TRUE(p.is_zero());
  MPoly sigma = MPoly::variable(z, 2, 0) + MPoly::variable(z, 2, 1) -
                MPoly::variable(z, 2, 0) * MPoly::variable(z, 2, 1);
  MPoly y0 = MPoly::variable(z, 3, 0), y1 = MPoly::variable(z, 3, 1), y2 = MPoly::variable(z, 3, 2);
  MPoly left = sigma.compose({sigma.compose({y0, y1}), y2});
  MPoly right = sigma.compose({y0, sigma.compose({y1, y2})});
  EXPECT_EQ(left, right);
}

TEST(MPoly, DeterminantOverPolynomialEntries) {
  Ring z = integers();
  MPoly a = MPoly::variable(z, 2, 0), b = MPoly::variable(z, 2, 1);
  MPoly zero(z, 2), one = MPoly::constant(RingValue::one(z), 2);
  DenseMatrix<MPoly> m(2, 2, zero);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = b;
  m(1, 1) = a;
  EXPECT_EQ(det_berkowitz(m, zero, one), a * a - b * b);
  EXPECT_EQ(det_permutation(m, zero, one), a * a - b * b);
}

}  // namespace
}  // namespace efgc
