#include "efgc/ringkit/linalg.hpp"
#include "efgc/multicurve/efg.hpp"

namespace efgc {

namespace {

EFG checked(EFG e) {
  ValidationReport rep = validate_efg(e);
  if (!rep.all_pass()) throw Error(ErrorKind::kValidationFailed, e.name() + ": " + rep.first_failure());
  return e;
}

MPoly sum_law(const Ring& k) { return MPoly::variable(k, 2, 0) + MPoly::variable(k, 2, 1); }

void require_size(const FinAbGroup& a, size_t n) {
  if (static_cast<long>(n) != a.order())
    throw Error(ErrorKind::kDimensionMismatch, "expected one value per character of " + a.describe());
}

EFG build_multiplicative(const Ring& k, const FinAbGroup& a, const std::vector<RingValue>& phi_in, int N,
                         const std::string& name) {
  require_size(a, phi_in.size());
  std::vector<RingValue> phi;
  for (const auto& p : phi_in) phi.push_back(embed(p, k));
  if (!phi[0].is_one()) throw Error(ErrorKind::kValidationFailed, name + ": phi(0) must be 1");
  for (long i = 0; i < a.order(); ++i)
    for (long j = 0; j < a.order(); ++j)
      if (phi[i] * phi[j] != phi[a.index(a.add(a.element(i), a.element(j)))])
        throw Error(ErrorKind::kValidationFailed, name + ": phi is not a homomorphism");
  // y = prod_alpha (1 - u phi(-alpha)) with u = 1 - x.
  Poly y = Poly::constant(RingValue::one(k));
  RingValue lead = RingValue::one(k);
  std::vector<RingValue> c;
  for (long i = 0; i < a.order(); ++i) {
    RingValue pn = phi[a.index(a.neg(a.element(i)))];
    y = y * Poly(k, {RingValue::one(k) - pn, pn});
    lead *= pn;
    c.push_back(RingValue::one(k) - phi[i]);
  }
  auto linv = try_inverse(lead);
  if (!linv) throw Error(ErrorKind::kValidationFailed, name + ": phi values must be units");
  Curve curve(y * *linv, N);
  RingValue iota = -curve.x() * curve.inverse_of_linear(RingValue::one(k));
  MPoly x0 = MPoly::variable(k, 2, 0), x1 = MPoly::variable(k, 2, 1);
  MPoly sigma = x0 + x1 - x0 * x1;
  return checked(EFG(curve, a, sigma, iota, c, curve.constant(*linv), SeriesFamily::kMultiplicative, name));
}

}  // namespace

EFG multiplicative(const Ring& k, const FinAbGroup& a, const std::vector<RingValue>& phi, int N) {
  return build_multiplicative(k, a, phi, N, "multiplicative");
}

EFG multiplicative_universal(const FinAbGroup& a, int N, const Ring& base) {
  Ring k = group_ring(base, a, default_symbols(a.rank()));
  std::vector<RingValue> phi;
  for (long i = 0; i < a.order(); ++i) phi.push_back(RingValue::group_basis(k, i));
  return build_multiplicative(k, a, phi, N, "multiplicative_universal");
}

EFG product_over_field(const Ring& field, const FinAbGroup& a, const std::vector<RingValue>& phi, int N) {
  if (field->kind() != RingKind::kRationals && field->kind() != RingKind::kPrimeField)
    throw Error(ErrorKind::kUnsupportedRing, "product_over_field needs Q or a prime field");
  require_size(a, phi.size());
  for (size_t i = 0; i < phi.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (embed(phi[i], field) == embed(phi[j], field))
        throw Error(ErrorKind::kValidationFailed, "product_over_field: phi must be injective");
  return build_multiplicative(field, a, phi, N, "product_over_field");
}

EFG additive(const Ring& k, const FinAbGroup& a, const std::vector<RingValue>& c_in, int N) {
  require_size(a, c_in.size());
  std::vector<RingValue> c;
  Poly f = Poly::constant(RingValue::one(k));
  for (const auto& v : c_in) {
    c.push_back(embed(v, k));
    f = f * Poly(k, {-c.back(), RingValue::one(k)});
  }
  Curve curve(f, N);
  return checked(EFG(curve, a, sum_law(k), -curve.x(), c, RingValue::one(curve.ring()), SeriesFamily::kAdditive,
                     "additive"));
}

EFG counterexample(int N) {
  Ring k = square_zero_f2();
  FinAbGroup a({2});
  SquareZeroElem e;
  e.poly = {2};
  std::vector<RingValue> c{RingValue::zero(k), RingValue::from_square_zero(k, e)};
  Poly f = Poly(k, {RingValue::zero(k), c[1], RingValue::one(k)});
  Curve curve(f, N);
  return checked(EFG(curve, a, sum_law(k), -curve.x(), c, RingValue::one(curve.ring()), SeriesFamily::kAdditive,
                     "counterexample"));
}

EFG explicit_model_unchecked(const Ring& k, const FinAbGroup& a, const Poly& f, const MPoly& sigma,
                             const Poly& iota, const std::vector<RingValue>& c, int N,
                             std::optional<RingValue> norm_unit) {
  require_size(a, c.size());
  Curve curve(f.map_to(k), N);
  RingValue u = RingValue::one(curve.ring());
  EFG draft(curve, a, sigma.map_to(k), curve.element(iota), c, u, SeriesFamily::kNone, "explicit");
  if (norm_unit) {
    u = curve.constant(*norm_unit);
  } else {
    RingValue yraw = RingValue::one(curve.ring());
    for (long i = 0; i < a.order(); ++i) yraw *= x_alpha(draft, a.element(i));
    Poly p = curve.poly_of(yraw);
    if (p.degree() == curve.degree())
      if (auto inv = try_inverse(p.lead())) u = curve.constant(*inv);
  }
  return EFG(curve, a, sigma.map_to(k), curve.element(iota), c, u, SeriesFamily::kNone, "explicit");
}

EFG explicit_model(const Ring& k, const FinAbGroup& a, const Poly& f, const MPoly& sigma, const Poly& iota,
                   const std::vector<RingValue>& c, int N, std::optional<RingValue> norm_unit) {
  return checked(explicit_model_unchecked(k, a, f, sigma, iota, c, N, std::move(norm_unit)));
}

}  // namespace efgc
