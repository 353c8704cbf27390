#include "efgc/multicurve/curve.hpp"

#include "efgc/ringkit/linalg.hpp"
#include "efgc/ringkit/matrix.hpp"

namespace efgc {

Curve::Curve(Poly f, int truncation) : f_(std::move(f)), N_(truncation) {
  if (N_ < 1) throw Error(ErrorKind::kValidationFailed, "truncation must be at least 1");
  if (f_.degree() < 1 || !f_.is_monic()) throw Error(ErrorKind::kValidationFailed, "f must be monic of positive degree");
  if (!f_.coeff(0).is_zero()) throw Error(ErrorKind::kValidationFailed, "f(0) must be 0");
  fN_ = f_.pow(N_);
  R_ = poly_quotient(base(), fN_.coeffs(), "x");
  R2_ = poly_quotient(R_, fN_.map_to(R_).coeffs(), "x1");
  // The norm of a representative of degree < nN has y-degree <= nN.
  std::vector<RingValue> yN(rank() + 2, RingValue::zero(base()));
  yN[rank() + 1] = RingValue::one(base());
  S_ = poly_quotient(base(), yN, "y");
}

RingValue Curve::element(const Poly& p) const {
  Poly r = p.degree() >= fN_.degree() ? poly_mod(p.map_to(base()), fN_) : p.map_to(base());
  return RingValue::from_coeffs(R_, r.padded(rank()));
}

Poly Curve::poly_of(const RingValue& r) const { return Poly(base(), embed(r, R_).coeffs()); }

RingValue Curve::tensor_lift(const RingValue& r, int slot) const {
  if (slot == 0) return embed(r, R2_);
  return poly_of(r).eval(tensor_x1());
}

MPoly Curve::tensor_terms(const RingValue& t) const {
  MPoly out(base(), 2);
  RingValue tv = embed(t, R2_);
  const auto& outer = tv.coeffs();
  for (size_t j = 0; j < outer.size(); ++j) {
    const auto& inner = outer[j].coeffs();
    for (size_t i = 0; i < inner.size(); ++i)
      if (!inner[i].is_zero()) out.add_term({static_cast<int>(i), static_cast<int>(j)}, inner[i]);
  }
  return out;
}

bool Curve::is_point(const RingValue& c) const { return f_.eval(c).pow(N_).is_zero(); }

RingValue Curve::eval_at_point(const RingValue& r, const RingValue& c) const {
  if (!is_point(c)) throw Error(ErrorKind::kNotAPoint, c.to_string() + " is not a point of the curve");
  return poly_of(r).eval(c);
}

std::vector<Poly> f_adic_digits(const Poly& p, const Poly& f, int count) {
  std::vector<Poly> out;
  Poly rest = p;
  for (int i = 0; i < count; ++i) {
    auto [q, r] = poly_divmod(rest, f);
    out.push_back(r);
    rest = q;
  }
  return out;
}

std::vector<RingValue> Curve::parameter_norm(const RingValue& r) const { return parameter_norm(poly_of(r)); }

std::vector<RingValue> Curve::parameter_norm(const Poly& rep) const {
  if (rep.degree() > rank()) throw Error(ErrorKind::kPrecisionExceeded, "representative degree exceeds nN");
  int n = degree();
  Matrix m(S_, n, n);
  for (int j = 0; j < n; ++j) {
    Poly p = rep.map_to(base()) * Poly::monomial(RingValue::one(base()), j);
    auto digits = f_adic_digits(p, f_, N_ + 1);
    for (int a = 0; a < n; ++a) {
      std::vector<RingValue> coeffs(rank() + 1, RingValue::zero(base()));
      for (int i = 0; i <= N_; ++i) coeffs[i] = digits[i].coeff(a);
      m(a, j) = RingValue::from_coeffs(S_, coeffs);
    }
  }
  RingValue d = det_division_free(m);
  return d.coeffs();
}

namespace {

bool ground_regular(const RingValue& c) {
  try {
    return is_regular(c);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

bool Curve::regular_in_completion(const RingValue& r) const { return regular_in_completion(poly_of(r)); }

bool Curve::regular_in_completion(const Poly& rep) const {
  auto a = parameter_norm(rep);
  // y^d * unit + nilpotent lower terms is regular in k[[y]].
  for (size_t d = 0; d < a.size(); ++d) {
    if (try_inverse(a[d])) return true;
    if (!is_nilpotent(a[d])) break;
  }
  // y^d times a series whose constant term is regular.
  for (size_t d = 0; d < a.size(); ++d) {
    if (a[d].is_zero()) continue;
    return ground_regular(a[d]);
  }
  return false;
}

RingValue Curve::inverse_of_linear(const RingValue& a) const {
  RingValue ak = embed(a, base());
  auto fa_inv = try_inverse(f_.eval(ak));
  if (!fa_inv) throw Error(ErrorKind::kNonUnitDeterminant, "f(" + ak.to_string() + ") is not a unit");
  // Q = (f^N(x) - f^N(a)) / (x - a), and (a - x) Q = -(f^N - f^N(a)) = f^N(a) in R.
  Poly shifted = fN_ - Poly::constant(fN_.eval(ak));
  Poly lin(base(), {-ak, RingValue::one(base())});
  Poly q = poly_exact_div(shifted, lin);
  return element(q) * constant(fa_inv->pow(N_));
}

Curve Curve::base_change(const Ring& k) const { return Curve(f_.map_to(k), N_); }

int nilpotency_index(const RingValue& v, int bound) {
  RingValue p = v;
  for (int j = 1; j <= bound; ++j) {
    if (p.is_zero()) return j;
    p *= v;
  }
  return -1;
}

bool is_nilpotent(const RingValue& v, int bound) {
  RingValue p = v;
  for (int k = 1; k < bound; k *= 2) {
    if (p.is_zero()) return true;
    p *= p;
  }
  return p.is_zero();
}

}  // namespace efgc
