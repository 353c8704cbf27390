#pragma once

#include <utility>
#include <vector>

#include "efgc/ringkit/matrix.hpp"
#include "efgc/ringkit/mpoly.hpp"
#include "efgc/ringkit/poly.hpp"

namespace efgc {

// p(x) dx / q(x) with q monic; not reduced to lowest terms.
struct MeromorphicForm {
  Poly num;
  Poly den;
};

// b_(n-1) where p mod q = sum_{i<n} b_i x^i and n = deg q.
RingValue residue(const MeromorphicForm& w);
RingValue residue(const Poly& p, const Poly& q);
// Residue of d(p/q) = (q p' - p q') dx / q^2.
RingValue residue_of_derivative(const Poly& p, const Poly& q);
RingValue trace_of_multiplication(const Poly& g, const Poly& f);

// A k-linear map k[x]/f -> k given by its values on x^0, ..., x^(r-1).
struct Functional {
  std::vector<RingValue> values;
  friend bool operator==(const Functional&, const Functional&) = default;
};

// A = k[x]/f with f = x^r + a_1 x^(r-1) + ... + a_r.
class DualityAlgebra {
 public:
  explicit DualityAlgebra(Poly f);

  const Poly& f() const { return f_; }
  const Ring& ring() const { return f_.ring(); }
  int rank() const { return f_.degree(); }
  // a_k, the coefficient of x^(r-k); a_0 = 1.
  RingValue a(int k) const;

  Poly reduce(const Poly& p) const { return poly_mod(p, f_); }
  RingValue apply(const Functional& phi, const Poly& p) const;
  Functional basis_functional(int j) const;
  Functional trace_functional() const;
  Functional zero_functional() const;

  // e(x0, x1) = sum_{i+j<r} a_(r-i-j-1) x0^i x1^j.
  MPoly e() const;
  // (1 (x) phi)(e), an element of A of degree < r.
  Poly theta0(const Functional& phi) const;
  // Entry (i, j) is a_(r-1-i-j); anti-triangular with ones on the anti-diagonal.
  Matrix theta0_matrix() const;
  Functional theta0_inverse(const Poly& a) const;
  RingValue epsilon(const Poly& a) const;
  Functional psi() const { return theta0_inverse(Poly::constant(RingValue::one(ring()))); }
  // sum_i a_i psi(b_i) for e = sum_i a_i (x) b_i, reduced in A.
  Poly epsilon_contraction() const;

 private:
  Poly f_;
};

// (res(theta0(phi) dx / f), phi(1)).
std::pair<RingValue, RingValue> residue_pairing_check(const DualityAlgebra& alg, const Functional& phi);
// phi on k[x]/f0 versus its pullback to k[x]/f1 for f0 | f1.
std::pair<RingValue, RingValue> residue_inclusion_check(const Poly& f0, const Poly& f1, const Functional& phi);

}  // namespace efgc
