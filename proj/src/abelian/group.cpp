#include "efgc/abelian/group.hpp"

#include <sstream>

#include "efgc/error.hpp"

namespace efgc {

long gcd_long(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm_long(long a, long b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_long(a, b) * b;
}

FinAbGroup::FinAbGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  for (int d : factors_) {
    if (d < 2) throw Error(ErrorKind::kInvalidRing, "group factor must be >= 2");
    order_ *= d;
    exponent_ = lcm_long(exponent_, d);
    if (order_ > (1L << 30)) throw Error(ErrorKind::kGroupTooLarge, "group order overflow");
  }
}

GroupElement FinAbGroup::element(long index) const {
  GroupElement g(factors_.size(), 0);
  for (int i = rank() - 1; i >= 0; --i) {
    g[i] = static_cast<int>(index % factors_[i]);
    index /= factors_[i];
  }
  return g;
}

long FinAbGroup::index(const GroupElement& g) const {
  long idx = 0;
  for (int i = 0; i < rank(); ++i) idx = idx * factors_[i] + g[i];
  return idx;
}

std::vector<GroupElement> FinAbGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (long i = 0; i < order_; ++i) out.push_back(element(i));
  return out;
}

GroupElement FinAbGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement c(factors_.size());
  for (int i = 0; i < rank(); ++i) c[i] = (a[i] + b[i]) % factors_[i];
  return c;
}

GroupElement FinAbGroup::neg(const GroupElement& a) const {
  GroupElement c(factors_.size());
  for (int i = 0; i < rank(); ++i) c[i] = (factors_[i] - a[i]) % factors_[i];
  return c;
}

GroupElement FinAbGroup::scale(const GroupElement& a, long n) const {
  GroupElement c(factors_.size());
  for (int i = 0; i < rank(); ++i) {
    long v = (static_cast<long>(a[i]) * (n % factors_[i])) % factors_[i];
    if (v < 0) v += factors_[i];
    c[i] = static_cast<int>(v);
  }
  return c;
}

GroupElement FinAbGroup::reduce(const GroupElement& a) const {
  if (static_cast<int>(a.size()) != rank())
    throw Error(ErrorKind::kDimensionMismatch, "element has wrong number of coordinates");
  GroupElement c(factors_.size());
  for (int i = 0; i < rank(); ++i) {
    int v = a[i] % factors_[i];
    c[i] = v < 0 ? v + factors_[i] : v;
  }
  return c;
}

bool FinAbGroup::is_zero(const GroupElement& a) const {
  for (int v : a)
    if (v != 0) return false;
  return true;
}

long FinAbGroup::element_order(const GroupElement& a) const {
  long ord = 1;
  for (int i = 0; i < rank(); ++i) ord = lcm_long(ord, factors_[i] / gcd_long(a[i], factors_[i]));
  return ord;
}

long FinAbGroup::pairing(const GroupElement& alpha, const GroupElement& a) const {
  long total = 0;
  for (int i = 0; i < rank(); ++i) {
    long w = exponent_ / factors_[i];
    total = (total + static_cast<long>(alpha[i]) * a[i] % factors_[i] * w) % exponent_;
  }
  return total;
}

std::string FinAbGroup::label(const GroupElement& a) const {
  if (a.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  return os.str();
}

GroupElement FinAbGroup::parse_label(const std::string& text) const {
  GroupElement g;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(part, &pos);
    } catch (const std::exception&) {
      throw Error(ErrorKind::kParseError, "bad character label '" + text + "'");
    }
    while (pos < part.size() && part[pos] == ' ') ++pos;
    if (pos != part.size()) throw Error(ErrorKind::kParseError, "bad character label '" + text + "'");
    g.push_back(static_cast<int>(v));
  }
  if (rank() == 0) {
    if (g.size() == 1 && g[0] == 0) return {};
    if (g.empty()) return {};
    throw Error(ErrorKind::kParseError, "trivial group has only the character 0");
  }
  if (static_cast<int>(g.size()) != rank())
    throw Error(ErrorKind::kParseError, "character '" + text + "' has wrong rank");
  return reduce(g);
}

std::string FinAbGroup::describe() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << "x";
    os << "Z/" << factors_[i];
  }
  return os.str();
}

}  // namespace efgc
