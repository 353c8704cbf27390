#include "efgc/transfer/transfer.hpp"

#include <numeric>

namespace efgc {

namespace {

// p / x for a polynomial with zero constant term.
Poly divide_by_x(const Poly& p, const char* what) {
  if (p.is_zero()) return p;
  if (!p.coeff(0).is_zero()) throw Error(ErrorKind::kExactDivisionFailed, std::string(what) + " is not divisible by x");
  std::vector<RingValue> c(p.coeffs().begin() + 1, p.coeffs().end());
  return Poly(p.ring(), c);
}

void require_series_family(const EFG& e) {
  if (e.family() == SeriesFamily::kNone)
    throw Error(ErrorKind::kUnsupportedModel, "series-level v_n needs a multiplicative or additive model");
}

}  // namespace

Cocycle cocycle(const EFG& e) {
  const Ring& k = e.base();
  MPoly rest = e.sigma() - MPoly::variable(k, 2, 0) - MPoly::variable(k, 2, 1);
  MPoly F(k, 2);
  for (const auto& [ex, c] : rest.terms()) {
    if (ex[0] < 1 || ex[1] < 1)
      throw Error(ErrorKind::kExactDivisionFailed, "sigma - x0 - x1 is not divisible by x0 x1");
    F.add_term({ex[0] - 1, ex[1] - 1}, c);
  }
  return Cocycle{F};
}

RingValue vn_at_value(const EFG& e, const Cocycle& F, long n, const RingValue& c) {
  if (n == 0) throw Error(ErrorKind::kDegreeMismatch, "v_0 is not defined");
  const Ring& k = c.ring();
  if (n < 0) {
    const Curve& C = e.curve();
    Poly fN_over_x = divide_by_x(C.f_power(), "f^N");
    if (!fN_over_x.eval(c).is_zero())
      throw Error(ErrorKind::kPrecisionExceeded, "iota / x is not determined at " + c.to_string() + " at this truncation");
    RingValue vm1 = divide_by_x(C.poly_of(e.iota()), "iota").eval(c);
    return vm1 * vn_at_value(e, F, -n, e.negate(c));
  }
  RingValue v = RingValue::one(k), p = c;
  for (long i = 1; i < n; ++i) {
    v = RingValue::one(k) + (RingValue::one(k) + c * F.F.eval({c, p})) * v;
    p = e.add(c, p);
  }
  return v;
}

RingValue vn_at_point(const EFG& e, long n, const GroupElement& alpha) {
  return vn_at_value(e, cocycle(e), n, e.point(alpha));
}

Poly xn_poly(const EFG& e, long n) {
  require_series_family(e);
  if (n < 1) throw Error(ErrorKind::kUnsupportedModel, "series-level v_n needs n >= 1");
  const Ring& k = e.base();
  if (e.family() == SeriesFamily::kAdditive) return Poly::x(k) * RingValue::from_int(k, n);
  Poly one = Poly::constant(RingValue::one(k));
  return one - (one - Poly::x(k)).pow(n);
}

Poly vn_poly(const EFG& e, long n) { return divide_by_x(xn_poly(e, n), "x_n"); }

Poly wn_poly(const EFG& e, long n) {
  const Ring& k = e.base();
  return divide_by_x(vn_poly(e, n) - Poly::constant(RingValue::from_int(k, n)), "v_n - n");
}

RingValue vn_series(const EFG& e, long n) { return e.curve().element(vn_poly(e, n)); }

RingValue transfer_element(const EFG& e, const Subgroup& u, const std::optional<Presentation>& p) {
  Presentation pres = p ? *p : smith_presentation(u);
  if (p && !is_presentation(u, pres.elements))
    throw Error(ErrorKind::kNotASubgroup, "not a presentation of " + u.label());
  Cocycle F = cocycle(e);
  RingValue t = RingValue::one(e.base());
  for (size_t i = 0; i < pres.elements.size(); ++i)
    t *= vn_at_value(e, F, pres.orders[i], e.point(pres.elements[i]));
  return t;
}

RingValue transfer_quotient(const EFG& e, const Subgroup& u, const Subgroup& v, const std::optional<Presentation>& p) {
  Quotient q = quotient(u, v);
  Presentation pq = p ? *p : smith_presentation(Subgroup::whole(q.group()));
  Presentation lifted = q.lifted_presentation(pq);
  Cocycle F = cocycle(e);
  RingValue t = RingValue::one(e.base());
  for (size_t i = 0; i < lifted.elements.size(); ++i)
    t *= vn_at_value(e, F, lifted.orders[i], e.point(lifted.elements[i]));
  return t;
}

std::vector<RingValue> transfer_ideal(const EFG& e, const Subgroup& u) {
  std::vector<RingValue> out;
  for (const auto& a : u.elements()) out.push_back(e.point(a));
  return out;
}

RingValue eta_burnside(const EFG& e, const BurnsideElement& z) {
  if (!(z.group() == e.group())) throw Error(ErrorKind::kGroupMismatch, "Burnside ring of another group");
  RingValue out = RingValue::zero(e.base());
  for (const auto& [b, c] : z.coeffs())
    out += transfer_element(e, annihilator(b)) * RingValue::from_int(e.base(), c.get_si());
  return out;
}

MackeyData::MackeyData(EFG e) : efg_(std::move(e)), subgroups_(subgroups_all(efg_.group())) {
  for (const auto& b : subgroups_) {
    auto gens = transfer_ideal(efg_, annihilator(b));
    spans_.emplace(b, IdealSpan(efg_.base(), gens));
    ideals_.emplace(b, std::move(gens));
  }
}

const std::vector<RingValue>& MackeyData::ideal(const Subgroup& b) const { return ideals_.at(b); }

const RingValue& MackeyData::tau(const Subgroup& b, const Subgroup& c) const {
  if (!b.contains(c)) throw Error(ErrorKind::kNotASubgroup, c.label() + " is not contained in " + b.label());
  auto key = std::make_pair(b, c);
  auto it = tau_.find(key);
  if (it == tau_.end()) it = tau_.emplace(key, transfer_quotient(efg_, annihilator(c), annihilator(b))).first;
  return it->second;
}

bool MackeyData::congruent(const Subgroup& b, const RingValue& r, const RingValue& s) const {
  RingValue d = r - s;
  return d.is_zero() || spans_.at(b).contains(d);
}

RingValue MackeyData::res(const Subgroup& b, const Subgroup& c, const RingValue& r) const {
  if (!b.contains(c)) throw Error(ErrorKind::kNotASubgroup, c.label() + " is not contained in " + b.label());
  return r;
}

RingValue MackeyData::trf(const Subgroup& c, const Subgroup& b, const RingValue& r) const { return tau(b, c) * r; }

MackeyData mackey_build(const EFG& e) { return MackeyData(e); }

std::vector<AxiomResult> mackey_verify(const MackeyData& m) {
  const EFG& e = m.efg();
  const Ring& k = e.base();
  std::vector<RingValue> span = ring_basis(k);
  std::vector<AxiomResult> out;
  auto all_r = [&](auto&& pred) {
    for (const auto& r : span)
      if (!pred(r)) return false;
    return true;
  };
  const auto& subs = m.subgroups();
  for (const auto& b : subs) {
    std::string lb = b.label();
    out.push_back({"res_identity", lb, all_r([&](const RingValue& r) { return m.congruent(b, m.res(b, b, r), r); })});
    out.push_back({"trf_identity", lb, all_r([&](const RingValue& r) { return m.congruent(b, m.trf(b, b, r), r); })});
    for (const auto& c : subs) {
      if (!b.contains(c)) continue;
      std::string lbc = lb + " > " + c.label();
      bool wd = true;
      for (const auto& g : m.ideal(c)) wd = wd && m.congruent(b, m.trf(c, b, g), RingValue::zero(k));
      out.push_back({"trf_well_defined", lbc, wd});
      bool frob = true;
      for (const auto& r : span)
        for (const auto& s : span)
          frob = frob && m.congruent(b, m.trf(c, b, m.res(b, c, r) * s), r * m.trf(c, b, s));
      out.push_back({"frobenius", lbc, frob});
      for (const auto& d : subs) {
        if (!c.contains(d)) continue;
        std::string chain = lbc + " > " + d.label();
        out.push_back({"res_transitive", chain, all_r([&](const RingValue& r) {
                         return m.congruent(d, m.res(c, d, m.res(b, c, r)), m.res(b, d, r));
                       })});
        out.push_back({"trf_transitive", chain, all_r([&](const RingValue& r) {
                         return m.congruent(b, m.trf(c, b, m.trf(d, c, r)), m.trf(d, b, r));
                       })});
      }
      for (const auto& d : subs) {
        if (!b.contains(d)) continue;
        Subgroup cd = subgroup_intersection(c, d);
        long index = b.order() / subgroup_sum(c, d).order();
        RingValue idx = RingValue::from_int(k, index);
        out.push_back({"double_coset", lbc + "," + d.label(), all_r([&](const RingValue& r) {
                         return m.congruent(c, m.res(b, c, m.trf(d, b, r)), idx * m.trf(cd, c, m.res(d, cd, r)));
                       })});
      }
    }
  }
  return out;
}

bool product_type_check(const EFG& e) {
  for (const auto& c : e.points())
    if (!c.is_zero() && !is_unit(c)) return false;
  return true;
}

std::map<GroupElement, RingValue> split_idempotents(const EFG& e) {
  const Ring& k = e.base();
  long n = e.group().order();
  auto inv = try_inverse(RingValue::from_int(k, n));
  if (!inv) throw Error(ErrorKind::kNotInvertibleOrder, std::to_string(n) + " is not invertible in " + k->describe());
  Cocycle F = cocycle(e);
  std::map<GroupElement, RingValue> out;
  for (const auto& a : e.group().elements())
    out.emplace(a, RingValue::one(k) - vn_at_value(e, F, n, e.point(a)) * *inv);
  return out;
}

}  // namespace efgc
