#include "efgc/resdual/resdual.hpp"

namespace efgc {

RingValue residue(const MeromorphicForm& w) { return residue(w.num, w.den); }

RingValue residue(const Poly& p, const Poly& q) {
  if (!q.is_monic()) throw Error(ErrorKind::kNonMonicDenominator, "denominator " + q.to_string() + " is not monic");
  int n = q.degree();
  if (n == 0) return RingValue::zero(q.ring());
  return poly_mod(p.map_to(q.ring()), q).coeff(n - 1);
}

RingValue residue_of_derivative(const Poly& p, const Poly& q) {
  if (!q.is_monic()) throw Error(ErrorKind::kNonMonicDenominator, "denominator " + q.to_string() + " is not monic");
  Poly pk = p.map_to(q.ring());
  return residue(q * pk.derivative() - pk * q.derivative(), q * q);
}

RingValue trace_of_multiplication(const Poly& g, const Poly& f) {
  if (!f.is_monic() || f.degree() < 1) throw Error(ErrorKind::kNonMonicDenominator, "trace needs a monic modulus");
  RingValue tr = RingValue::zero(f.ring());
  Poly col = poly_mod(g.map_to(f.ring()), f);
  Poly x = Poly::x(f.ring());
  for (int i = 0; i < f.degree(); ++i) {
    tr += col.coeff(i);
    col = poly_mod(col * x, f);
  }
  return tr;
}

}  // namespace efgc
