#include "efgc/ringkit/poly.hpp"

#include "efgc/ringkit/linalg.hpp"

namespace efgc {

Poly::Poly(Ring ring, std::vector<RingValue> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
  for (auto& c : c_) c = embed(c, ring_);
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const RingValue& c) { return Poly(c.ring(), {c}); }

Poly Poly::x(const Ring& ring) { return Poly(ring, {RingValue::zero(ring), RingValue::one(ring)}); }

Poly Poly::monomial(const RingValue& c, int degree) {
  std::vector<RingValue> v(degree + 1, RingValue::zero(c.ring()));
  v[degree] = c;
  return Poly(c.ring(), std::move(v));
}

Poly Poly::from_ints(const Ring& ring, const std::vector<long>& coeffs) {
  std::vector<RingValue> v;
  for (long c : coeffs) v.push_back(RingValue::from_int(ring, c));
  return Poly(ring, std::move(v));
}

RingValue Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return RingValue::zero(ring_);
  return c_[i];
}

RingValue Poly::lead() const {
  if (c_.empty()) return RingValue::zero(ring_);
  return c_.back();
}

Poly Poly::operator-() const {
  Poly p(ring_);
  for (const auto& c : c_) p.c_.push_back(-c);
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), RingValue::zero(ring_));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), RingValue::zero(ring_));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
  std::vector<RingValue> out(a.c_.size() + b.c_.size() - 1, RingValue::zero(a.ring_));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  Poly p(a.ring_);
  p.c_ = std::move(out);
  p.trim();
  return p;
}

Poly operator*(const Poly& a, const RingValue& s) {
  Poly p(a.ring_);
  for (const auto& c : a.c_) p.c_.push_back(c * s);
  p.trim();
  return p;
}

bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_ && (a.c_.empty() || same_ring(a.ring_, b.ring_)); }

Poly Poly::pow(unsigned long e) const {
  Poly result = constant(RingValue::one(ring_));
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::derivative() const {
  Poly p(ring_);
  for (size_t i = 1; i < c_.size(); ++i) p.c_.push_back(c_[i] * RingValue::from_int(ring_, static_cast<long>(i)));
  p.trim();
  return p;
}

RingValue Poly::eval(const RingValue& point) const {
  const Ring& t = point.ring();
  RingValue acc = RingValue::zero(t);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * point + embed(c_[i], t);
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc(inner.ring());
  for (size_t i = c_.size(); i-- > 0;) acc = acc * inner + constant(embed(c_[i], inner.ring()));
  return acc;
}

Poly Poly::map_to(const Ring& target) const {
  std::vector<RingValue> v;
  for (const auto& c : c_) v.push_back(embed(c, target));
  return Poly(target, std::move(v));
}

std::vector<RingValue> Poly::padded(int length) const {
  std::vector<RingValue> v(length, RingValue::zero(ring_));
  for (int i = 0; i < length && i < static_cast<int>(c_.size()); ++i) v[i] = c_[i];
  if (static_cast<int>(c_.size()) > length)
    throw Error(ErrorKind::kDimensionMismatch, "polynomial longer than requested padding");
  return v;
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    std::string s = c_[i].to_string();
    bool negative = !s.empty() && s[0] == '-' && !c_[i].is_compound();
    if (negative) s = s.substr(1);
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string term;
    if (mono.empty())
      term = c_[i].is_compound() && !first ? "(" + s + ")" : s;
    else if (s == "1")
      term = mono;
    else if (c_[i].is_compound())
      term = "(" + s + ")*" + mono;
    else
      term = s + "*" + mono;
    if (first)
      out = (negative ? "-" : "") + term;
    else
      out += (negative ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorKind::kDivisionByZero, "polynomial division by zero");
  RingValue lc = den.lead();
  RingValue inv = lc;
  if (!lc.is_one()) {
    auto maybe = try_inverse(lc);
    if (!maybe) throw Error(ErrorKind::kNonUnitLeadingCoefficient, "leading coefficient " + lc.to_string());
    inv = *maybe;
  }
  std::vector<RingValue> r = num.map_to(den.ring()).coeffs();
  int dd = den.degree();
  int dn = static_cast<int>(r.size()) - 1;
  if (dn < dd) return {Poly(den.ring()), Poly(den.ring(), r)};
  std::vector<RingValue> q(dn - dd + 1, RingValue::zero(den.ring()));
  for (int k = dn; k >= dd; --k) {
    if (r[k].is_zero()) continue;
    RingValue c = lc.is_one() ? r[k] : r[k] * inv;
    q[k - dd] = c;
    for (int i = 0; i <= dd; ++i) r[k - dd + i] -= c * den.coeffs()[i];
  }
  r.resize(dd);
  return {Poly(den.ring(), std::move(q)), Poly(den.ring(), std::move(r))};
}

Poly poly_mod(const Poly& num, const Poly& den) { return poly_divmod(num, den).second; }

Poly poly_exact_div(const Poly& num, const Poly& den) {
  auto [q, r] = poly_divmod(num, den);
  if (!r.is_zero()) throw Error(ErrorKind::kNotDivisible, "polynomial division leaves a remainder");
  return q;
}

}  // namespace efgc
