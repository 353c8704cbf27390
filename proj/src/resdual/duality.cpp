#include "efgc/resdual/resdual.hpp"

namespace efgc {

DualityAlgebra::DualityAlgebra(Poly f) : f_(std::move(f)) {
  if (!f_.is_monic() || f_.degree() < 1) throw Error(ErrorKind::kNonMonicDenominator, "f must be monic of degree >= 1");
}

RingValue DualityAlgebra::a(int k) const { return f_.coeff(rank() - k); }

RingValue DualityAlgebra::apply(const Functional& phi, const Poly& p) const {
  Poly r = reduce(p.map_to(ring()));
  RingValue out = RingValue::zero(ring());
  for (int i = 0; i <= r.degree(); ++i) out += r.coeff(i) * phi.values.at(i);
  return out;
}

Functional DualityAlgebra::basis_functional(int j) const {
  Functional z = zero_functional();
  z.values.at(j) = RingValue::one(ring());
  return z;
}

Functional DualityAlgebra::zero_functional() const {
  return Functional{std::vector<RingValue>(rank(), RingValue::zero(ring()))};
}

Functional DualityAlgebra::trace_functional() const {
  Functional t = zero_functional();
  for (int j = 0; j < rank(); ++j) t.values[j] = trace_of_multiplication(Poly::monomial(RingValue::one(ring()), j), f_);
  return t;
}

MPoly DualityAlgebra::e() const {
  MPoly out(ring(), 2);
  int r = rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; i + j < r; ++j) out.add_term({i, j}, a(r - i - j - 1));
  return out;
}

Poly DualityAlgebra::theta0(const Functional& phi) const {
  int r = rank();
  std::vector<RingValue> c(r, RingValue::zero(ring()));
  for (int i = 0; i < r; ++i)
    for (int j = 0; i + j < r; ++j) c[i] += a(r - i - j - 1) * phi.values.at(j);
  return Poly(ring(), c);
}

Matrix DualityAlgebra::theta0_matrix() const {
  int r = rank();
  Matrix m(ring(), r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m(i, j) = i + j < r ? a(r - 1 - i - j) : RingValue::zero(ring());
  return m;
}

Functional DualityAlgebra::theta0_inverse(const Poly& target) const {
  int r = rank();
  Poly c = reduce(target.map_to(ring()));
  Functional phi = zero_functional();
  // Row i reads sum_{j <= r-1-i} a_(r-1-i-j) phi_j = c_i, and a_0 = 1.
  for (int i = r - 1; i >= 0; --i) {
    int top = r - 1 - i;
    RingValue v = c.coeff(i);
    for (int j = 0; j < top; ++j) v -= a(top - j) * phi.values[j];
    phi.values[top] = v;
  }
  return phi;
}

RingValue DualityAlgebra::epsilon(const Poly& target) const { return theta0_inverse(target).values.at(0); }

Poly DualityAlgebra::epsilon_contraction() const {
  Functional p = psi();
  Poly out(ring());
  MPoly el = e();
  for (const auto& [ex, c] : el.terms()) out += Poly::monomial(c * p.values.at(ex[1]), ex[0]);
  return reduce(out);
}

std::pair<RingValue, RingValue> residue_pairing_check(const DualityAlgebra& alg, const Functional& phi) {
  return {residue(alg.theta0(phi), alg.f()), phi.values.at(0)};
}

std::pair<RingValue, RingValue> residue_inclusion_check(const Poly& f0, const Poly& f1, const Functional& phi) {
  DualityAlgebra a0(f0), a1(f1);
  if (!poly_mod(f1, f0).is_zero()) throw Error(ErrorKind::kNotDivisible, f0.to_string() + " does not divide " + f1.to_string());
  Functional pulled = a1.zero_functional();
  for (int j = 0; j < a1.rank(); ++j) pulled.values[j] = a0.apply(phi, Poly::monomial(RingValue::one(a1.ring()), j));
  return {residue(a0.theta0(phi), f0), residue(a1.theta0(pulled), f1)};
}

}  // namespace efgc
