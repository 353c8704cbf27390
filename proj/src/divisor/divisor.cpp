#include "efgc/divisor/divisor.hpp"

#include "efgc/ringkit/linalg.hpp"
#include "efgc/ringkit/matrix.hpp"

namespace efgc {

namespace {

void require_same_base(const Divisor& a, const Divisor& b) {
  if (!same_ring(a.base(), b.base()))
    throw Error(ErrorKind::kBaseMismatch, a.base()->describe() + " vs " + b.base()->describe());
}

// Monic polynomial from [1, c_1, ..., c_n] with det(lambda - M) = lambda^n + c_1 lambda^(n-1) + ...
Poly charpoly_to_poly(const Ring& k, const std::vector<RingValue>& cp) {
  int n = static_cast<int>(cp.size()) - 1;
  std::vector<RingValue> c(n + 1, RingValue::zero(k));
  for (int i = 0; i <= n; ++i) c[n - i] = cp[i];
  return Poly(k, c);
}

RingValue in_ring(const Ring& ring, const Poly& p) {
  return RingValue::from_coeffs(ring, p.map_to(ring->base()).padded(ring->quotient_degree()));
}

}  // namespace

Divisor::Divisor(EFG efg, Poly gen) : efg_(std::move(efg)) {
  if (!same_ring(gen.ring(), efg_.base())) {
    if (embeds_into(efg_.base(), gen.ring()))
      efg_ = efg_.base_change(gen.ring());
    else
      gen = gen.map_to(efg_.base());
  }
  if (gen.is_zero()) throw Error(ErrorKind::kOpennessFailed, "the zero ideal is not open");
  if (!gen.is_monic()) {
    auto inv = try_inverse(gen.lead());
    if (!inv) throw Error(ErrorKind::kNonUnitLeadingCoefficient, "divisor generator " + gen.to_string());
    gen = gen * *inv;
  }
  gen_ = gen;
  const Curve& C = efg_.curve();
  Poly fM = Poly::constant(RingValue::one(base()));
  for (int M = 0; M <= C.truncation(); ++M) {
    if (poly_mod(fM, gen_).is_zero()) {
      openness_ = M;
      return;
    }
    fM = fM * C.f();
  }
  throw Error(ErrorKind::kOpennessFailed,
              "f^" + std::to_string(C.truncation()) + " is not divisible by " + gen_.to_string());
}

Ring Divisor::ring() const {
  if (degree() == 0) throw Error(ErrorKind::kDegreeMismatch, "the empty divisor has the zero ring");
  return poly_quotient(base(), gen_.coeffs(), "x");
}

Divisor point_divisor(const EFG& e, const RingValue& c) {
  EFG ec = same_ring(c.ring(), e.base()) ? e : e.base_change(c.ring());
  if (!ec.curve().is_point(c)) throw Error(ErrorKind::kNotAPoint, c.to_string() + " is not a point");
  return Divisor(ec, Poly(c.ring(), {-c, RingValue::one(c.ring())}));
}

Divisor character_divisor(const EFG& e, const GroupElement& alpha) { return point_divisor(e, e.point(alpha)); }

Divisor empty_divisor(const EFG& e) { return Divisor(e, Poly::constant(RingValue::one(e.base()))); }

Divisor full_divisor(const EFG& e) { return Divisor(e, e.curve().f()); }

Divisor divisor_from_points(const EFG& e, const std::vector<RingValue>& points) {
  if (points.empty()) return empty_divisor(e);
  Divisor d = point_divisor(e, points[0]);
  for (size_t i = 1; i < points.size(); ++i) d = divisor_sum(d, point_divisor(d.efg(), points[i]));
  return d;
}

Divisor base_change(const Divisor& d, const Ring& k) {
  if (same_ring(d.base(), k)) return d;
  return Divisor(d.efg().base_change(k), d.gen().map_to(k));
}

Divisor divisor_sum(const Divisor& a, const Divisor& b) {
  require_same_base(a, b);
  return Divisor(a.efg(), a.gen() * b.gen());
}

RingValue fD_norm(const Divisor& d) {
  const Curve& C = d.curve();
  const Ring& Rp = C.ring();
  if (d.degree() == 0) return RingValue::one(Rp);
  Ring W = poly_quotient(Rp, d.gen().map_to(Rp).coeffs(), "x0");
  RingValue x0 = RingValue::generator(W);
  RingValue iota0 = C.poly_of(d.efg().iota()).eval(x0);
  RingValue diff = d.efg().sigma().eval({iota0, embed(C.x(), W)});
  return relative_norm(diff, Rp);
}

RingValue euler_class(const Divisor& d) { return d.curve().poly_of(fD_norm(d)).coeff(0); }

bool generates_divisor_ideal(const Divisor& d, const RingValue& fD) {
  const Curve& C = d.curve();
  auto [q, rem] = poly_divmod(C.poly_of(fD), d.gen());
  if (!rem.is_zero()) return false;
  // q only matters modulo the annihilator of gen, which is (f^N / gen).
  Poly h = poly_exact_div(C.f_power(), d.gen());
  if (h.degree() == 0) return true;
  Ring Ah = poly_quotient(d.base(), h.coeffs(), "x");
  try {
    return static_cast<bool>(try_inverse(in_ring(Ah, poly_mod(q, h))));
  } catch (const Error&) {
    return false;
  }
}

RingValue difference_at_first(const EFG& e, const RingValue& u) {
  const Curve& C = e.curve();
  return e.sigma().eval({C.constant(e.negate(embed(u, e.base()))), C.x()});
}

RingValue difference_at_second(const EFG& e, const RingValue& u) {
  const Curve& C = e.curve();
  return e.sigma().eval({e.iota(), C.constant(embed(u, e.base()))});
}

Divisor convolution(const Divisor& a, const Divisor& b) {
  require_same_base(a, b);
  if (a.degree() == 0 || b.degree() == 0) return empty_divisor(a.efg());
  const Ring& k = a.base();
  Ring U = a.ring();
  Ring W = poly_quotient(U, b.gen().map_to(U).coeffs(), "y2");
  RingValue s = a.efg().sigma().eval({embed(RingValue::generator(U), W), RingValue::generator(W)});
  return Divisor(a.efg(), charpoly_to_poly(k, relative_charpoly(s, k)));
}

Divisor translate_divisor(const Divisor& d, const GroupElement& alpha) {
  if (d.degree() == 0) return d;
  Ring U = d.ring();
  RingValue xa = d.curve().poly_of(x_alpha(d.efg(), alpha)).eval(RingValue::generator(U));
  return Divisor(d.efg(), charpoly_to_poly(d.base(), relative_charpoly(xa, d.base())));
}

Containment contains(const Divisor& big, const Divisor& small) {
  require_same_base(big, small);
  Poly rem = poly_mod(big.gen(), small.gen());
  return Containment{rem.is_zero(), rem.coeffs()};
}

Divisor subtract(const Divisor& big, const Divisor& small) {
  if (!contains(big, small).contained)
    throw Error(ErrorKind::kNotContained, small.gen().to_string() + " does not divide " + big.gen().to_string());
  return Divisor(big.efg(), poly_exact_div(big.gen(), small.gen()));
}

bool complementary_kernels(const Divisor& p, const Divisor& q) {
  require_same_base(p, q);
  if (p.degree() == 0 || q.degree() == 0) return true;
  Poly prod = p.gen() * q.gen();
  Ring S = poly_quotient(p.base(), prod.coeffs(), "x");
  RingValue gp = in_ring(S, p.gen()), gq = in_ring(S, q.gen());
  if (!(gp * gq).is_zero()) return false;
  auto check = [&](const RingValue& kill, const RingValue& gen) {
    for (const auto& v : kernel_basis(mult_matrix(kill)))
      if (!ideal_membership(unflatten(S, v), {gen})) return false;
    return true;
  };
  return check(gp, gq) && check(gq, gp);
}

PointsScheme points_scheme(const Divisor& d, int r) {
  try {
    ground_ring(d.base());
  } catch (const Error&) {
    throw Error(ErrorKind::kUnsupportedRing, "points scheme over " + d.base()->describe());
  }
  if (r < 0 || r > d.degree()) throw Error(ErrorKind::kDegreeMismatch, "r must lie in [0, deg D]");
  PointsScheme ps{{d.base()}, {}, d};
  for (int i = 0; i < r; ++i) {
    Ring next = poly_quotient(ps.remaining.base(), ps.remaining.gen().coeffs(), "u" + std::to_string(i + 1));
    RingValue u = RingValue::generator(next);
    Divisor moved = base_change(ps.remaining, next);
    ps.remaining = subtract(moved, point_divisor(moved.efg(), u));
    ps.tower.push_back(next);
    ps.points.push_back(u);
  }
  return ps;
}

int moment_cutoff(const Divisor& d) {
  const Curve& C = d.curve();
  auto basis = topological_basis(d.efg(), C.rank());
  for (int m = 0; m < C.rank(); ++m)
    if (poly_mod(C.poly_of(basis[m]), d.gen()).is_zero()) return m;
  return C.rank();
}

MomentVector moments(const Divisor& d, std::optional<int> cutoff) {
  const Curve& C = d.curve();
  const Ring& k = d.base();
  int m = cutoff ? *cutoff : moment_cutoff(d);
  if (m > C.rank()) throw Error(ErrorKind::kCutoffTooSmall, "cutoff beyond the truncation");
  auto basis = topological_basis(d.efg(), std::min(m + 1, C.rank()));
  if (m < C.rank() && !poly_mod(C.poly_of(basis[m]), d.gen()).is_zero())
    throw Error(ErrorKind::kCutoffTooSmall, "e_" + std::to_string(m) + " does not vanish on D");
  MomentVector mv;
  mv.degree = d.degree();
  mv.cutoff = m;
  int s = d.degree();
  if (s == 0) {
    mv.entries[MultiIndex(m, 0)] = RingValue::one(k);
    return mv;
  }
  Ring U = d.ring();
  MPoly zero(k, m);
  DenseMatrix<MPoly> mat(s, s, zero);
  for (int i = 0; i < m; ++i) {
    Matrix mi = relative_mult_matrix(in_ring(U, poly_mod(C.poly_of(basis[i]), d.gen())), k);
    MPoly ti = MPoly::variable(k, m, i);
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b)
        if (!mi(a, b).is_zero()) mat(a, b) += ti * mi(a, b);
  }
  MPoly det = det_division_free(mat, zero, MPoly::constant(RingValue::one(k), m));
  for (const auto& [ex, c] : det.terms()) mv.entries[ex] = c;
  return mv;
}

Divisor perturb(const Divisor& d, const Poly& r, int bound) {
  Poly rk = r.map_to(d.base());
  if (rk.degree() >= d.degree() && !rk.is_zero())
    throw Error(ErrorKind::kDegreeMismatch, "perturbation must have degree below deg D");
  for (const auto& c : rk.coeffs())
    if (!is_nilpotent(c, bound)) throw Error(ErrorKind::kNotNilpotent, c.to_string() + " is not nilpotent");
  return Divisor(d.efg(), d.gen() + rk);
}

Poly restrict_generator(const Divisor& ref, const Divisor& other, int bound) {
  require_same_base(ref, other);
  if (ref.degree() != other.degree()) throw Error(ErrorKind::kDegreeMismatch, "degrees differ");
  Poly diff = other.gen() - ref.gen();
  for (const auto& c : diff.coeffs())
    if (!is_nilpotent(c, bound)) throw Error(ErrorKind::kNotNilpotent, c.to_string() + " is not nilpotent");
  return diff;
}

}  // namespace efgc
