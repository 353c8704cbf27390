#pragma once

#include <string>
#include <vector>

namespace efgc {

// Coordinates of an element with respect to the factor list of its group.
using GroupElement = std::vector<int>;

// A finite abelian group written as Z/d_1 x ... x Z/d_k. The dual group is
// represented by the same factor list; the pairing of alpha in A* with a in A
// is sum_i alpha_i * a_i / d_i in Q/Z.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  long order() const { return order_; }
  // Least common multiple of the factors (1 for the trivial group).
  long exponent() const { return exponent_; }

  // Elements are indexed in mixed radix with the last coordinate fastest.
  GroupElement element(long index) const;
  long index(const GroupElement& g) const;
  std::vector<GroupElement> elements() const;

  GroupElement zero() const { return GroupElement(factors_.size(), 0); }
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement scale(const GroupElement& a, long n) const;
  GroupElement reduce(const GroupElement& a) const;
  bool is_zero(const GroupElement& a) const;
  long element_order(const GroupElement& a) const;

  // Pairing value as a residue mod exponent(): alpha(a) * exponent().
  long pairing(const GroupElement& alpha, const GroupElement& a) const;

  // "1,0" style label; the trivial group's only element is "0".
  std::string label(const GroupElement& a) const;
  GroupElement parse_label(const std::string& text) const;
  std::string describe() const;

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<int> factors_;
  long order_ = 1;
  long exponent_ = 1;
};

long gcd_long(long a, long b);
long lcm_long(long a, long b);

}  // namespace efgc
