#include "efgc/abelian/burnside.hpp"

#include "efgc/error.hpp"

namespace efgc {

BurnsideElement BurnsideElement::basis(const Subgroup& b) {
  BurnsideElement e(b.group());
  e.add(b, 1);
  return e;
}

BurnsideElement BurnsideElement::one(const FinAbGroup& group) { return basis(Subgroup::whole(group)); }

void BurnsideElement::add(const Subgroup& b, const mpz_class& c) {
  if (!(b.group() == group_)) throw Error(ErrorKind::kGroupMismatch, "subgroup of another group");
  if (c == 0) return;
  auto it = coeffs_.find(b);
  if (it == coeffs_.end()) {
    coeffs_.emplace(b, c);
    return;
  }
  it->second += c;
  if (it->second == 0) coeffs_.erase(it);
}

BurnsideElement operator+(const BurnsideElement& a, const BurnsideElement& b) {
  if (!(a.group_ == b.group_)) throw Error(ErrorKind::kGroupMismatch, "Burnside elements of different groups");
  BurnsideElement out = a;
  for (const auto& [s, c] : b.coeffs_) out.add(s, c);
  return out;
}

BurnsideElement operator*(const BurnsideElement& a, const mpz_class& s) {
  BurnsideElement out(a.group_);
  for (const auto& [b, c] : a.coeffs_) out.add(b, c * s);
  return out;
}

BurnsideElement burnside_mul(const BurnsideElement& a, const BurnsideElement& b) {
  if (!(a.group() == b.group())) throw Error(ErrorKind::kGroupMismatch, "Burnside elements of different groups");
  BurnsideElement out(a.group());
  for (const auto& [s, cs] : a.coeffs()) {
    for (const auto& [t, ct] : b.coeffs()) {
      long index = a.group().order() / subgroup_sum(s, t).order();
      out.add(subgroup_intersection(s, t), cs * ct * index);
    }
  }
  return out;
}

std::string BurnsideElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [b, c] : coeffs_) {
    std::string term = (c == 1 ? "" : c.get_str() + "*") + "[A/" + b.label() + "]";
    if (!out.empty()) out += term[0] == '-' ? "" : "+";
    out += term;
  }
  return out;
}

}  // namespace efgc
