#pragma once

#include <map>
#include <string>
#include <vector>

#include "efgc/ringkit/poly.hpp"
#include "efgc/ringkit/ring.hpp"

namespace efgc {

constexpr int kUnbounded = -1;

// Sparse multivariate polynomial; terms of total degree above the bound are
// dropped (kUnbounded keeps everything).
class MPoly {
 public:
  using Exponent = std::vector<int>;

  MPoly() = default;
  MPoly(Ring ring, int num_vars, int max_total_degree = kUnbounded)
      : ring_(std::move(ring)), nvars_(num_vars), max_deg_(max_total_degree) {}

  static MPoly constant(const RingValue& c, int num_vars, int max_total_degree = kUnbounded);
  static MPoly variable(const Ring& ring, int num_vars, int index, int max_total_degree = kUnbounded);
  // p(x_index) as an element of the num_vars-variable ring.
  static MPoly from_poly(const Poly& p, int num_vars, int index, int max_total_degree = kUnbounded);

  const Ring& ring() const { return ring_; }
  int num_vars() const { return nvars_; }
  int max_total_degree() const { return max_deg_; }
  const std::map<Exponent, RingValue>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RingValue coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const RingValue& c);
  int degree_in(int var) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const RingValue& s);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  MPoly pow(unsigned long e) const;
  // Substitute images[i] for variable i (all images share a variable count).
  MPoly compose(const std::vector<MPoly>& images) const;
  // Evaluate at points of a common ring that k maps into.
  RingValue eval(const std::vector<RingValue>& points) const;
  MPoly map_to(const Ring& target) const;
  // Reduce every variable modulo the monic polynomial m.
  MPoly reduce_each(const Poly& m) const;
  std::string to_string(const std::vector<std::string>& names) const;

  static int total_degree(const Exponent& e);

 private:
  Ring ring_;
  int nvars_ = 0;
  int max_deg_ = kUnbounded;
  std::map<Exponent, RingValue> terms_;
};

}  // namespace efgc
