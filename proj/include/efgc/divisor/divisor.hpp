#pragma once

#include <map>
#include <optional>
#include <vector>

#include "efgc/multicurve/efg.hpp"

namespace efgc {

constexpr int kNilpotenceBound = 64;

// D = spf(R'/(gen)) with gen monic over k' and f^M = 0 mod gen for some M <= N.
// The EFG is carried base-changed to k'.
class Divisor {
 public:
  Divisor(EFG efg, Poly gen);

  const EFG& efg() const { return efg_; }
  const Curve& curve() const { return efg_.curve(); }
  const Ring& base() const { return efg_.base(); }
  const Poly& gen() const { return gen_; }
  int degree() const { return gen_.degree(); }
  int openness_exponent() const { return openness_; }
  // O_D = k'[x]/(gen); throws for the empty divisor.
  Ring ring() const;

  friend bool operator==(const Divisor& a, const Divisor& b) {
    return same_ring(a.base(), b.base()) && a.gen_ == b.gen_;
  }

 private:
  EFG efg_;
  Poly gen_;
  int openness_ = 0;
};

// A point c of the curve over some k' that k maps into.
Divisor point_divisor(const EFG& e, const RingValue& c);
Divisor character_divisor(const EFG& e, const GroupElement& alpha);
Divisor empty_divisor(const EFG& e);
// The divisor of f, i.e. the sum of all [phi(alpha)].
Divisor full_divisor(const EFG& e);
Divisor divisor_from_points(const EFG& e, const std::vector<RingValue>& points);
// Move a divisor to a ring reachable from its base.
Divisor base_change(const Divisor& d, const Ring& k);

Divisor divisor_sum(const Divisor& a, const Divisor& b);

// Determinant of multiplication by d(x0, x) on O_D (x) R over R.
RingValue fD_norm(const Divisor& d);
RingValue euler_class(const Divisor& d);
// f_D = gen * q with q a unit modulo f^N / gen, i.e. (f_D) = (gen) in R.
bool generates_divisor_ideal(const Divisor& d, const RingValue& fD);

// d(u, x) = sigma(iota(u), x) and d(x, u) = sigma(iota(x), u) in R'.
RingValue difference_at_first(const EFG& e, const RingValue& u);
RingValue difference_at_second(const EFG& e, const RingValue& u);

// Charpoly over k' of sigma(y1, y2) on O_D (x) O_D'.
Divisor convolution(const Divisor& a, const Divisor& b);
// Charpoly over k' of x_alpha(y) on O_D; the points u become u - phi(alpha).
Divisor translate_divisor(const Divisor& d, const GroupElement& alpha);

struct Containment {
  bool contained = false;
  // Coefficients of gen_big mod gen_small; they generate the obstruction ideal.
  std::vector<RingValue> obstruction;
};
Containment contains(const Divisor& big, const Divisor& small);
Divisor subtract(const Divisor& big, const Divisor& small);

// In O_(P+Q) the annihilator of gen_P is the ideal generated by gen_Q.
bool complementary_kernels(const Divisor& p, const Divisor& q);

struct PointsScheme {
  std::vector<Ring> tower;  // k_0 = k', ..., k_r
  std::vector<RingValue> points;  // tautological point in k_(i+1)
  Divisor remaining;  // over k_r
};
PointsScheme points_scheme(const Divisor& d, int r);

using MultiIndex = std::vector<int>;
struct MomentVector {
  int degree = 0;
  int cutoff = 0;
  std::map<MultiIndex, RingValue> entries;
  friend bool operator==(const MomentVector& a, const MomentVector& b) {
    return a.degree == b.degree && a.entries == b.entries;
  }
};
// Smallest m with e_m = 0 mod gen, searched up to nN.
int moment_cutoff(const Divisor& d);
MomentVector moments(const Divisor& d, std::optional<int> cutoff = std::nullopt);

Divisor perturb(const Divisor& d, const Poly& r, int bound = kNilpotenceBound);
Poly restrict_generator(const Divisor& ref, const Divisor& other, int bound = kNilpotenceBound);

}  // namespace efgc
