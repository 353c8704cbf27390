#include "efgc/ringkit/mpoly.hpp"

#include <numeric>

namespace efgc {

int MPoly::total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

MPoly MPoly::constant(const RingValue& c, int num_vars, int max_total_degree) {
  MPoly p(c.ring(), num_vars, max_total_degree);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

MPoly MPoly::variable(const Ring& ring, int num_vars, int index, int max_total_degree) {
  MPoly p(ring, num_vars, max_total_degree);
  Exponent e(num_vars, 0);
  e[index] = 1;
  p.add_term(e, RingValue::one(ring));
  return p;
}

MPoly MPoly::from_poly(const Poly& q, int num_vars, int index, int max_total_degree) {
  MPoly p(q.ring(), num_vars, max_total_degree);
  for (int i = 0; i <= q.degree(); ++i) {
    Exponent e(num_vars, 0);
    e[index] = i;
    p.add_term(e, q.coeffs()[i]);
  }
  return p;
}

RingValue MPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? RingValue::zero(ring_) : it->second;
}

void MPoly::add_term(const Exponent& e, const RingValue& c) {
  if (c.is_zero()) return;
  if (max_deg_ != kUnbounded && total_degree(e) > max_deg_) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, embed(c, ring_));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int MPoly::degree_in(int var) const {
  int d = kZeroDegree;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

MPoly MPoly::operator-() const {
  MPoly p(ring_, nvars_, max_deg_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  int bound = a.max_deg_;
  if (bound == kUnbounded || (b.max_deg_ != kUnbounded && b.max_deg_ < bound)) bound = b.max_deg_;
  MPoly p(a.ring_, a.nvars_, bound);
  MPoly::Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      if (bound != kUnbounded && MPoly::total_degree(e) > bound) continue;
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

MPoly operator*(const MPoly& a, const RingValue& s) {
  MPoly p(a.ring_, a.nvars_, a.max_deg_);
  for (const auto& [e, c] : a.terms_) p.add_term(e, c * s);
  return p;
}

MPoly MPoly::pow(unsigned long e) const {
  MPoly result = constant(RingValue::one(ring_), nvars_, max_deg_);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::compose(const std::vector<MPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_) throw Error(ErrorKind::kDimensionMismatch, "compose arity");
  const MPoly& ref = images.at(0);
  std::vector<std::vector<MPoly>> powers(nvars_);
  MPoly out(ref.ring(), ref.num_vars(), ref.max_total_degree());
  for (const auto& [e, c] : terms_) {
    MPoly term = constant(embed(c, ref.ring()), ref.num_vars(), ref.max_total_degree());
    for (int i = 0; i < nvars_; ++i) {
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(RingValue::one(ref.ring()), ref.num_vars(), ref.max_total_degree()));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
      if (e[i] > 0) term = term * pw[e[i]];
    }
    out += term;
  }
  return out;
}

RingValue MPoly::eval(const std::vector<RingValue>& points) const {
  if (static_cast<int>(points.size()) != nvars_) throw Error(ErrorKind::kDimensionMismatch, "eval arity");
  const Ring& t = points.at(0).ring();
  std::vector<std::vector<RingValue>> powers(nvars_);
  RingValue out = RingValue::zero(t);
  for (const auto& [e, c] : terms_) {
    RingValue term = embed(c, t);
    for (int i = 0; i < nvars_; ++i) {
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(RingValue::one(t));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * points[i]);
      if (e[i] > 0) term *= pw[e[i]];
    }
    out += term;
  }
  return out;
}

MPoly MPoly::map_to(const Ring& target) const {
  MPoly p(target, nvars_, max_deg_);
  for (const auto& [e, c] : terms_) p.add_term(e, embed(c, target));
  return p;
}

MPoly MPoly::reduce_each(const Poly& m) const {
  if (!m.is_monic()) throw Error(ErrorKind::kNonUnitLeadingCoefficient, "reduction modulus must be monic");
  int d = m.degree();
  MPoly cur = *this;
  for (int var = 0; var < nvars_; ++var) {
    while (cur.degree_in(var) >= d) {
      MPoly next(ring_, nvars_, max_deg_);
      for (const auto& [e, c] : cur.terms_) {
        if (e[var] < d) {
          next.add_term(e, c);
          continue;
        }
        // x^e = x^(e-d) * x^d and x^d = -(m - x^d)
        Exponent base = e;
        base[var] -= d;
        for (int i = 0; i < d; ++i) {
          Exponent f = base;
          f[var] += i;
          next.add_term(f, -(c * m.coeffs()[i]));
        }
      }
      cur = std::move(next);
    }
  }
  return cur;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string s = c.to_string();
    std::string term;
    if (mono.empty())
      term = c.is_compound() ? "(" + s + ")" : s;
    else if (s == "1")
      term = mono;
    else if (s == "-1")
      term = "-" + mono;
    else if (c.is_compound())
      term = "(" + s + ")*" + mono;
    else
      term = s + "*" + mono;
    if (!first) out += (term[0] == '-') ? " - " + term.substr(1) : " + " + term;
    else out = term;
    first = false;
  }
  return out;
}

}  // namespace efgc
