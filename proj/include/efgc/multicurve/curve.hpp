#pragma once

#include <vector>

#include "efgc/ringkit/mpoly.hpp"
#include "efgc/ringkit/poly.hpp"
#include "efgc/ringkit/ring.hpp"

namespace efgc {

// The truncated embeddable curve R = k[x]/(f^N). Curve elements are
// RingValues of ring(); tensor elements live in tensor_ring() =
// R[x1]/(f(x1)^N), whose coefficients are polynomials in x0.
class Curve {
 public:
  Curve() = default;
  Curve(Poly f, int truncation);

  const Ring& base() const { return f_.ring(); }
  const Poly& f() const { return f_; }
  const Poly& f_power() const { return fN_; }
  int truncation() const { return N_; }
  int degree() const { return f_.degree(); }
  int rank() const { return f_.degree() * N_; }
  const Ring& ring() const { return R_; }
  const Ring& tensor_ring() const { return R2_; }
  // k[y]/(y^(nN+1)), large enough to hold norms of representatives exactly.
  const Ring& parameter_ring() const { return S_; }

  RingValue element(const Poly& p) const;
  Poly poly_of(const RingValue& r) const;
  RingValue x() const { return RingValue::generator(R_); }
  RingValue y() const { return element(f_); }
  RingValue constant(const RingValue& c) const { return embed(c, R_); }

  RingValue tensor_x0() const { return embed(x(), R2_); }
  RingValue tensor_x1() const { return RingValue::generator(R2_); }
  // r(x0) or r(x1) in the tensor ring.
  RingValue tensor_lift(const RingValue& r, int slot) const;
  // Representative of a tensor element as a polynomial in (x0, x1).
  MPoly tensor_terms(const RingValue& t) const;

  // f(c)^N = 0 for c in any ring that k maps into.
  bool is_point(const RingValue& c) const;
  RingValue eval_at_point(const RingValue& r, const RingValue& c) const;

  // Coefficients in y of the norm from k[x] to k[y], y = f(x), of the
  // canonical representative of r.
  std::vector<RingValue> parameter_norm(const RingValue& r) const;
  std::vector<RingValue> parameter_norm(const Poly& rep) const;
  // Sufficient test for the canonical representative of r being regular in
  // the f-adic completion of k[x].
  bool regular_in_completion(const RingValue& r) const;
  bool regular_in_completion(const Poly& rep) const;

  // (a - x)^(-1) in R, via f^N(x) = f^N(a) + (x - a) Q(x); requires f(a) a unit.
  RingValue inverse_of_linear(const RingValue& a) const;

  Curve base_change(const Ring& k) const;

 private:
  Poly f_;
  Poly fN_;
  int N_ = 0;
  Ring R_;
  Ring R2_;
  Ring S_;
};

// Smallest j in [1, bound] with v^j = 0, or -1.
int nilpotency_index(const RingValue& v, int bound);
bool is_nilpotent(const RingValue& v, int bound = 64);

// Coefficients of p in the f-adic expansion p = sum_i p_i f^i with deg p_i < deg f.
std::vector<Poly> f_adic_digits(const Poly& p, const Poly& f, int count);

}  // namespace efgc
