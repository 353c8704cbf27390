#include "efgc/multicurve/efg.hpp"

#include "efgc/ringkit/linalg.hpp"
#include "efgc/ringkit/matrix.hpp"

namespace efgc {

namespace {

MPoly var(const Ring& k, int nvars, int i) { return MPoly::variable(k, nvars, i); }

// Exact equality, falling back to equality modulo f^N in every variable.
bool equal_mod_fN(const Curve& c, const MPoly& a, const MPoly& b) {
  if (a == b) return true;
  return (a - b).reduce_each(c.f_power()).is_zero();
}

// Smallest j <= bound with f(image)^j = 0, or -1.
int vanishing_power(const Curve& c, const RingValue& image, int bound) {
  return nilpotency_index(c.f().eval(image), bound);
}

void check_legal(const Curve& c, const RingValue& image) {
  RingValue fi = c.f().eval(image);
  if (fi.pow(c.truncation()).is_zero()) return;
  throw Error(ErrorKind::kIllegalSubstitution,
              "f(" + image.to_string() + ")^" + std::to_string(c.truncation()) + " is not zero",
              vanishing_power(c, image, 4 * c.truncation()));
}

bool is_unit_element(const Curve& c, const RingValue& r) {
  Poly p = c.poly_of(r);
  if (p.degree() <= 0) return static_cast<bool>(try_inverse(p.coeff(0)));
  try {
    return static_cast<bool>(try_inverse(r));
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

EFG::EFG(Curve curve, FinAbGroup group, MPoly sigma, RingValue iota, std::vector<RingValue> points,
         RingValue norm_unit, SeriesFamily family, std::string name)
    : curve_(std::move(curve)),
      group_(std::move(group)),
      sigma_(std::move(sigma)),
      iota_(std::move(iota)),
      points_(std::move(points)),
      norm_unit_(std::move(norm_unit)),
      family_(family),
      name_(std::move(name)) {
  if (static_cast<long>(points_.size()) != group_.order())
    throw Error(ErrorKind::kDimensionMismatch, "one point per character is required");
  for (auto& p : points_) p = embed(p, base());
  iota_ = embed(iota_, curve_.ring());
  norm_unit_ = embed(norm_unit_, curve_.ring());
}

RingValue EFG::add(const RingValue& a, const RingValue& b) const {
  return sigma_.eval({a, embed(b, a.ring())});
}

RingValue EFG::negate(const RingValue& c) const { return curve_.poly_of(iota_).eval(c); }

EFG EFG::base_change(const Ring& k) const {
  Curve c = curve_.base_change(k);
  std::vector<RingValue> pts;
  for (const auto& p : points_) pts.push_back(embed(p, k));
  return EFG(c, group_, sigma_.map_to(k), c.element(curve_.poly_of(iota_)), pts,
             c.element(curve_.poly_of(norm_unit_)), family_, name_);
}

EFG EFG::with_sigma(MPoly sigma) const {
  EFG out = *this;
  out.sigma_ = sigma.map_to(base());
  return out;
}

bool ValidationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
  return "";
}

ValidationReport validate_efg(const EFG& e) {
  ValidationReport rep;
  const Curve& C = e.curve();
  const Ring& k = e.base();
  const FinAbGroup& A = e.group();
  auto push = [&](const std::string& name, bool pass, std::string detail = "") {
    rep.checks.push_back({name, pass, std::move(detail)});
  };

  push("f_normalized", C.f().is_monic() && C.f().coeff(0).is_zero());

  const MPoly& s = e.sigma();
  MPoly x0 = var(k, 2, 0), x1 = var(k, 2, 1);
  MPoly zero2(k, 2);
  push("sigma_unital", equal_mod_fN(C, s.compose({x0, zero2}), x0));
  push("sigma_symmetric", equal_mod_fN(C, s.compose({x1, x0}), s));
  {
    MPoly a = var(k, 3, 0), b = var(k, 3, 1), c = var(k, 3, 2);
    MPoly left = s.compose({s.compose({a, b}), c});
    MPoly right = s.compose({a, s.compose({b, c})});
    push("sigma_associative", equal_mod_fN(C, left, right));
  }
  try {
    RingValue v = substitute(C, s, {C.x(), e.iota()});
    push("sigma_inverse", v.is_zero(), v.is_zero() ? "" : "sigma(x, iota) = " + C.poly_of(v).to_string());
  } catch (const Error& err) {
    push("sigma_inverse", false, err.what());
  }

  push("zero_point", e.point(A.zero()).is_zero());
  {
    bool ok = true;
    std::string detail;
    for (long i = 0; i < A.order() && ok; ++i)
      if (!C.f().eval(e.points()[i]).is_zero()) {
        ok = false;
        detail = "f(c_" + A.label(A.element(i)) + ") != 0";
      }
    push("points_on_curve", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (long i = 0; i < A.order() && ok; ++i)
      for (long j = 0; j < A.order() && ok; ++j) {
        auto ai = A.element(i), aj = A.element(j);
        if (e.add(e.points()[i], e.points()[j]) != e.point(A.add(ai, aj))) {
          ok = false;
          detail = "sigma(c_" + A.label(ai) + ", c_" + A.label(aj) + ") != c_" + A.label(A.add(ai, aj));
        }
      }
    push("phi_homomorphism", ok, detail);
  }
  {
    bool ok = true;
    for (long i = 0; i < A.order() && ok; ++i)
      ok = e.negate(e.points()[i]) == e.point(A.neg(A.element(i)));
    push("iota_on_points", ok);
  }

  push("x_regular", C.regular_in_completion(Poly::x(k)));

  {
    RingValue yraw = RingValue::one(C.ring());
    for (long i = 0; i < A.order(); ++i) yraw *= x_alpha(e, A.element(i));
    bool ok = e.norm_unit() * yraw == C.y() && is_unit_element(C, e.norm_unit());
    push("norm_unit", ok);
  }
  {
    int m = C.rank();
    auto basis = topological_basis(e, m);
    Matrix mat(k, m, m);
    bool triangular = true;
    for (int j = 0; j < m; ++j) {
      auto col = C.poly_of(basis[j]).padded(m);
      for (int i = 0; i < m; ++i) {
        mat(i, j) = col[i];
        if (i > j && !col[i].is_zero()) triangular = false;
      }
    }
    RingValue det = RingValue::one(k);
    if (triangular) {
      for (int i = 0; i < m; ++i) det *= mat(i, i);
    } else {
      det = det_division_free(mat);
    }
    push("topological_basis", static_cast<bool>(try_inverse(det)), "det = " + det.to_string());
  }
  return rep;
}

RingValue substitute(const Curve& curve, const MPoly& pattern, const std::vector<RingValue>& images) {
  for (const auto& im : images) check_legal(curve, im);
  return pattern.eval(images);
}

RingValue substitute(const Curve& curve, const RingValue& r, const RingValue& image) {
  check_legal(curve, image);
  return curve.poly_of(r).eval(image);
}

RingValue difference_function(const EFG& e) {
  const Curve& C = e.curve();
  check_legal(C, e.iota());
  return e.sigma().eval({C.tensor_lift(e.iota(), 0), C.tensor_x1()});
}

RingValue x_alpha(const EFG& e, const GroupElement& alpha) {
  const Curve& C = e.curve();
  RingValue neg = e.negate(e.point(alpha));
  return e.sigma().eval({C.x(), C.constant(neg)});
}

std::vector<RingValue> topological_basis(const EFG& e, int count) {
  const Curve& C = e.curve();
  if (count > C.rank()) throw Error(ErrorKind::kPrecisionExceeded, "topological basis beyond the truncation");
  long n = e.group().order();
  std::vector<RingValue> xs;
  for (long i = 0; i < n; ++i) xs.push_back(x_alpha(e, e.group().element(i)));
  std::vector<RingValue> out;
  RingValue cur = RingValue::one(C.ring());
  for (int i = 0; i < count; ++i) {
    out.push_back(cur);
    cur *= xs[i % n];
  }
  return out;
}

RingValue apply(const Curve& curve, const CurveMap& m, const RingValue& r) {
  check_legal(curve, m.image);
  return curve.poly_of(r).eval(m.image);
}

RingValue apply_to_representative(const CurveMap& m, const Poly& p) { return p.eval(m.image); }

CurveMap translation(const EFG& e, const GroupElement& alpha) {
  const Curve& C = e.curve();
  CurveMap m{C.ring(), e.sigma().eval({C.x(), C.constant(e.point(alpha))})};
  check_legal(C, m.image);
  return m;
}

CurveMap formal_expansion_unchecked(const EFG& e, const GroupElement& alpha, int M) {
  const Ring& k = e.base();
  std::vector<RingValue> tM(M + 1, RingValue::zero(k));
  tM[M] = RingValue::one(k);
  Ring T = poly_quotient(k, tM, "t");
  RingValue t = RingValue::generator(T);
  return CurveMap{T, e.sigma().eval({embed(e.point(alpha), T), t})};
}

CurveMap formal_expansion_at(const EFG& e, const GroupElement& alpha, int M) {
  if (M > e.curve().truncation())
    throw Error(ErrorKind::kPrecisionExceeded,
                "expansion precision " + std::to_string(M) + " exceeds truncation " +
                    std::to_string(e.curve().truncation()));
  CurveMap m = formal_expansion_unchecked(e, alpha, M);
  check_legal(e.curve(), m.image);
  return m;
}

RingValue counterexample_fK(const EFG& e, int K) {
  const Curve& C = e.curve();
  if (e.base()->kind() != RingKind::kSquareZeroF2)
    throw Error(ErrorKind::kUnsupportedModel, "f_K lives on the counterexample curve");
  RingValue out = RingValue::zero(C.ring());
  RingValue y = C.y();
  for (int k = 0; k <= K; ++k) {
    SquareZeroElem u;
    u.module = {(1 << (k + 1)) - 1};
    RingValue coeff = RingValue::from_square_zero(e.base(), u);
    out += C.constant(coeff) * y.pow(1UL << k);
  }
  return out;
}

}  // namespace efgc
