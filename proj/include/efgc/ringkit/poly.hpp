#pragma once

#include <string>
#include <utility>
#include <vector>

#include "efgc/ringkit/ring.hpp"

namespace efgc {

// Degree reported for the zero polynomial (stands in for minus infinity).
constexpr int kZeroDegree = -1;

// Dense univariate polynomial, ascending coefficients, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Ring ring) : ring_(std::move(ring)) {}
  Poly(Ring ring, std::vector<RingValue> coeffs);

  static Poly constant(const RingValue& c);
  static Poly x(const Ring& ring);
  static Poly monomial(const RingValue& c, int degree);
  static Poly from_ints(const Ring& ring, const std::vector<long>& coeffs);

  const Ring& ring() const { return ring_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<RingValue>& coeffs() const { return c_; }
  RingValue coeff(int i) const;
  RingValue lead() const;
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const RingValue& s);
  friend bool operator==(const Poly& a, const Poly& b);

  Poly pow(unsigned long e) const;
  Poly derivative() const;
  // Horner evaluation at a point of any ring that k maps into.
  RingValue eval(const RingValue& point) const;
  Poly compose(const Poly& inner) const;
  // Coefficientwise image in a ring reachable from ring().
  Poly map_to(const Ring& target) const;
  // Coefficients padded with zeros to the given length.
  std::vector<RingValue> padded(int length) const;

  // "c0 + c1*x + c2*x^2" with ascending powers.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  Ring ring_;
  std::vector<RingValue> c_;
};

// num = q*den + r with deg r < deg den; den's leading coefficient must be a unit.
std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den);
Poly poly_mod(const Poly& num, const Poly& den);
// Exact quotient; throws NotDivisible when the remainder is nonzero.
Poly poly_exact_div(const Poly& num, const Poly& den);

}  // namespace efgc
