#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "efgc/abelian/subgroup.hpp"

namespace efgc {

// Integer combination of the classes [A/B]; zero coefficients are not stored.
class BurnsideElement {
 public:
  explicit BurnsideElement(FinAbGroup group) : group_(std::move(group)) {}
  static BurnsideElement basis(const Subgroup& b);
  static BurnsideElement one(const FinAbGroup& group);

  const FinAbGroup& group() const { return group_; }
  const std::map<Subgroup, mpz_class>& coeffs() const { return coeffs_; }
  void add(const Subgroup& b, const mpz_class& c);

  friend BurnsideElement operator+(const BurnsideElement& a, const BurnsideElement& b);
  friend BurnsideElement operator*(const BurnsideElement& a, const mpz_class& s);
  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
    return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
  }
  std::string to_string() const;

 private:
  FinAbGroup group_;
  std::map<Subgroup, mpz_class> coeffs_;
};

// [A/B][A/B'] = |A/(B+B')| [A/(B n B')], extended bilinearly.
BurnsideElement burnside_mul(const BurnsideElement& a, const BurnsideElement& b);

}  // namespace efgc
