#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "efgc/abelian/burnside.hpp"
#include "efgc/abelian/subgroup.hpp"
#include "efgc/multicurve/efg.hpp"
#include "efgc/ringkit/linalg.hpp"

namespace efgc {

// sigma = x0 + x1 + x0 x1 F
struct Cocycle {
  MPoly F;
};

Cocycle cocycle(const EFG& e);

// v_n(c_alpha) by the scalar recursion; n < 0 goes through v_{-1} = iota / x.
RingValue vn_at_point(const EFG& e, long n, const GroupElement& alpha);
RingValue vn_at_value(const EFG& e, const Cocycle& F, long n, const RingValue& c);

// x_n, v_n = x_n / x and w_n = (v_n - n) / x as polynomials over k, for the
// multiplicative and additive families only (UnsupportedModel otherwise).
Poly xn_poly(const EFG& e, long n);
Poly vn_poly(const EFG& e, long n);
Poly wn_poly(const EFG& e, long n);
RingValue vn_series(const EFG& e, long n);

RingValue transfer_element(const EFG& e, const Subgroup& u, const std::optional<Presentation>& p = std::nullopt);
// t(U/V, phi-bar) from the deterministic section of the quotient.
RingValue transfer_quotient(const EFG& e, const Subgroup& u, const Subgroup& v,
                            const std::optional<Presentation>& p = std::nullopt);
std::vector<RingValue> transfer_ideal(const EFG& e, const Subgroup& u);

RingValue eta_burnside(const EFG& e, const BurnsideElement& z);

struct AxiomResult {
  std::string axiom;
  std::string chain;
  bool pass = true;
};

// k_B = k / I(ann B), elements kept as representatives in k.
class MackeyData {
 public:
  explicit MackeyData(EFG e);

  const EFG& efg() const { return efg_; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  const std::vector<RingValue>& ideal(const Subgroup& b) const;
  // tau^B_C for C <= B.
  const RingValue& tau(const Subgroup& b, const Subgroup& c) const;
  bool congruent(const Subgroup& b, const RingValue& r, const RingValue& s) const;

  RingValue res(const Subgroup& b, const Subgroup& c, const RingValue& r) const;
  RingValue trf(const Subgroup& c, const Subgroup& b, const RingValue& r) const;

 private:
  EFG efg_;
  std::vector<Subgroup> subgroups_;
  std::map<Subgroup, std::vector<RingValue>> ideals_;
  std::map<Subgroup, IdealSpan> spans_;
  mutable std::map<std::pair<Subgroup, Subgroup>, RingValue> tau_;
};

MackeyData mackey_build(const EFG& e);
std::vector<AxiomResult> mackey_verify(const MackeyData& m);

bool product_type_check(const EFG& e);
// alpha -> 1 - v_n(c_alpha) / n with n = |A|.
std::map<GroupElement, RingValue> split_idempotents(const EFG& e);

}  // namespace efgc
