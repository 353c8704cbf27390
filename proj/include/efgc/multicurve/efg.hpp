#pragma once

#include <optional>
#include <string>
#include <vector>

#include "efgc/abelian/group.hpp"
#include "efgc/multicurve/curve.hpp"

namespace efgc {

// Families whose n-fold sums x_n are honest polynomials in x.
enum class SeriesFamily { kNone, kMultiplicative, kAdditive };

// An A-equivariant formal group on an embeddable curve, at truncation N.
// sigma is a polynomial representative of x(a+b) in x0, x1 over k; iota is
// the element x(-a) of R; points()[i] is c_alpha for alpha = element(i) of A*.
class EFG {
 public:
  EFG() = default;
  EFG(Curve curve, FinAbGroup group, MPoly sigma, RingValue iota, std::vector<RingValue> points,
      RingValue norm_unit, SeriesFamily family, std::string name);

  const Curve& curve() const { return curve_; }
  const Ring& base() const { return curve_.base(); }
  const FinAbGroup& group() const { return group_; }
  const MPoly& sigma() const { return sigma_; }
  const RingValue& iota() const { return iota_; }
  const std::vector<RingValue>& points() const { return points_; }
  const RingValue& point(const GroupElement& alpha) const { return points_.at(group_.index(group_.reduce(alpha))); }
  const RingValue& norm_unit() const { return norm_unit_; }
  SeriesFamily family() const { return family_; }
  const std::string& name() const { return name_; }

  // sigma(a, b) for a, b in a common ring that k maps into.
  RingValue add(const RingValue& a, const RingValue& b) const;
  // iota(c) for a point c.
  RingValue negate(const RingValue& c) const;

  EFG base_change(const Ring& k) const;
  // Same data with a different group law; the result is not validated.
  EFG with_sigma(MPoly sigma) const;

 private:
  Curve curve_;
  FinAbGroup group_;
  MPoly sigma_;
  RingValue iota_;
  std::vector<RingValue> points_;
  RingValue norm_unit_;
  SeriesFamily family_ = SeriesFamily::kNone;
  std::string name_;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  std::string first_failure() const;
};

ValidationReport validate_efg(const EFG& e);

// Builders; each returns a validated model or throws ValidationFailed.
// phi holds the units phi(alpha) of k indexed like the elements of A*.
EFG multiplicative(const Ring& k, const FinAbGroup& a, const std::vector<RingValue>& phi, int N);
// k = base[A*] with phi(alpha) the basis element of alpha.
EFG multiplicative_universal(const FinAbGroup& a, int N, const Ring& base = integers());
// Multiplicative model over a field with phi injective.
EFG product_over_field(const Ring& field, const FinAbGroup& a, const std::vector<RingValue>& phi, int N);
// sigma = x0 + x1; c holds the points c_alpha.
EFG additive(const Ring& k, const FinAbGroup& a, const std::vector<RingValue>& c, int N);
// k = F2[e] + M, A = Z/2, additive law, c = e, f = x^2 + e x.
EFG counterexample(int N);
EFG explicit_model(const Ring& k, const FinAbGroup& a, const Poly& f, const MPoly& sigma, const Poly& iota,
                   const std::vector<RingValue>& c, int N, std::optional<RingValue> norm_unit = std::nullopt);
// The same data without validation, for reporting on candidate models.
EFG explicit_model_unchecked(const Ring& k, const FinAbGroup& a, const Poly& f, const MPoly& sigma,
                             const Poly& iota, const std::vector<RingValue>& c, int N,
                             std::optional<RingValue> norm_unit = std::nullopt);

// Evaluate the representative of `pattern` at the images, after checking
// f(image)^N = 0 in the target ring; throws IllegalSubstitution.
RingValue substitute(const Curve& curve, const MPoly& pattern, const std::vector<RingValue>& images);
RingValue substitute(const Curve& curve, const RingValue& r, const RingValue& image);

// d(x0, x1) = sigma(iota(x0), x1) in the tensor ring.
RingValue difference_function(const EFG& e);
// x_alpha = sigma(x, iota(c_alpha)).
RingValue x_alpha(const EFG& e, const GroupElement& alpha);
// e_i = prod_{j<i} x_{alpha_j} with alpha_(nj+k) = element(k), for i < count.
std::vector<RingValue> topological_basis(const EFG& e, int count);

// An algebra map out of R, determined by the image of x.
struct CurveMap {
  Ring target;
  RingValue image;
};
RingValue apply(const Curve& curve, const CurveMap& m, const RingValue& r);
// The image of a polynomial representative, with no legality check.
RingValue apply_to_representative(const CurveMap& m, const Poly& p);

// x -> sigma(x, c_alpha).
CurveMap translation(const EFG& e, const GroupElement& alpha);
// x -> sigma(c_alpha, t) in k[t]/(t^M); requires M <= N.
CurveMap formal_expansion_at(const EFG& e, const GroupElement& alpha, int M);
// Same map into k[t]/(t^M) without the precision check, for representatives.
CurveMap formal_expansion_unchecked(const EFG& e, const GroupElement& alpha, int M);

// sum_{k<=K} u_(2^(k+1)-1) y^(2^k) on the counterexample curve.
RingValue counterexample_fK(const EFG& e, int K);

}  // namespace efgc
