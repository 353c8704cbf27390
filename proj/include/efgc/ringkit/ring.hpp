#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "efgc/abelian/group.hpp"
#include "efgc/error.hpp"

namespace efgc {

enum class RingKind {
  kIntegers,
  kRationals,
  kIntegersMod,
  kPrimeField,
  kGroupRing,
  kPolyQuotient,
  kSquareZeroF2,
};

class RingDescriptor;
using Ring = std::shared_ptr<const RingDescriptor>;
class RingValue;

// Element p + m of F2[e] (+) M, where M has F2-basis u_1, u_2, ... with
// e*u_{i+1} = u_i, u_0 = 0 and u_i*u_j = 0.
struct SquareZeroElem {
  std::vector<std::uint64_t> poly;  // bit i is the coefficient of e^i; trimmed
  std::vector<int> module;          // sorted indices i >= 1 with coefficient 1

  friend bool operator==(const SquareZeroElem&, const SquareZeroElem&) = default;
};

class RingValue {
 public:
  RingValue() = default;

  static RingValue zero(const Ring& ring);
  static RingValue one(const Ring& ring);
  static RingValue from_int(const Ring& ring, const mpz_class& n);
  static RingValue from_int(const Ring& ring, long n) { return from_int(ring, mpz_class(n)); }
  // Image of a/b; throws NotInvertible if b is not invertible in the ring.
  static RingValue from_rational(const Ring& ring, const mpq_class& q);
  // Group ring / quotient element from its coordinates on the canonical basis.
  static RingValue from_coeffs(const Ring& ring, std::vector<RingValue> coeffs);
  static RingValue from_square_zero(const Ring& ring, SquareZeroElem elem);
  // Basis element v_g of a group ring (g given by its index).
  static RingValue group_basis(const Ring& ring, long index);
  // Class of the adjoined variable in a polynomial quotient.
  static RingValue generator(const Ring& ring);

  const Ring& ring() const { return ring_; }
  RingKind kind() const;
  bool is_zero() const;
  bool is_one() const;
  bool is_minus_one() const;

  const mpz_class& integer() const;  // Integers, IntegersMod, PrimeField
  const mpq_class& rational() const;
  const std::vector<RingValue>& coeffs() const;  // GroupRing, PolyQuotient
  const SquareZeroElem& square_zero() const;

  RingValue operator-() const;
  RingValue& operator+=(const RingValue& o);
  RingValue& operator-=(const RingValue& o);
  RingValue& operator*=(const RingValue& o);
  friend RingValue operator+(RingValue a, const RingValue& b) { return a += b; }
  friend RingValue operator-(RingValue a, const RingValue& b) { return a -= b; }
  friend RingValue operator*(const RingValue& a, const RingValue& b);
  friend bool operator==(const RingValue& a, const RingValue& b);
  friend bool operator!=(const RingValue& a, const RingValue& b) { return !(a == b); }

  RingValue pow(unsigned long e) const;
  // Whether the canonical text needs parentheses as a coefficient.
  bool is_compound() const;
  std::string to_string() const;

 private:
  using Payload = std::variant<std::monostate, mpz_class, mpq_class, std::vector<RingValue>,
                               SquareZeroElem>;
  RingValue(Ring ring, Payload payload) : ring_(std::move(ring)), data_(std::move(payload)) {}
  void check_same(const RingValue& o) const;

  Ring ring_;
  Payload data_;
};

std::ostream& operator<<(std::ostream& os, const RingValue& v);

class RingDescriptor {
 public:
  RingKind kind() const { return kind_; }
  const mpz_class& modulus() const { return modulus_; }
  const Ring& base() const { return base_; }
  const FinAbGroup& group() const { return group_; }
  // Monic modulus of a polynomial quotient, ascending, over base().
  const std::vector<RingValue>& quotient_modulus() const { return quotient_; }
  int quotient_degree() const { return static_cast<int>(quotient_.size()) - 1; }
  const std::string& variable() const { return variable_; }
  const std::vector<std::string>& symbols() const { return symbols_; }
  long group_add(long i, long j) const { return add_table_[i * group_.order() + j]; }
  long group_neg(long i) const { return neg_table_[i]; }

  // Number of canonical basis elements over the ground ring (0 if infinite).
  long rank() const { return rank_; }

  std::string describe() const;

 private:
  friend Ring integers();
  friend Ring rationals();
  friend Ring integers_mod(const mpz_class& m);
  friend Ring prime_field(const mpz_class& p);
  friend Ring group_ring(const Ring& base, const FinAbGroup& group, std::vector<std::string> symbols);
  friend Ring poly_quotient(const Ring& base, const std::vector<RingValue>& monic, std::string variable);
  friend Ring square_zero_f2();

  RingKind kind_ = RingKind::kIntegers;
  mpz_class modulus_;
  Ring base_;
  FinAbGroup group_;
  std::vector<RingValue> quotient_;
  std::string variable_;
  std::vector<std::string> symbols_;
  std::vector<long> add_table_;
  std::vector<long> neg_table_;
  long rank_ = 1;
};

Ring integers();
Ring rationals();
Ring integers_mod(const mpz_class& m);
Ring prime_field(const mpz_class& p);
Ring group_ring(const Ring& base, const FinAbGroup& group, std::vector<std::string> symbols = {});
Ring poly_quotient(const Ring& base, const std::vector<RingValue>& monic, std::string variable = "t");
Ring square_zero_f2();

// Structural equality of descriptors (names of symbols are ignored).
bool same_ring(const Ring& a, const Ring& b);

// Default unit symbols v, w, z, s, ... for a group ring of the given rank.
std::vector<std::string> default_symbols(int rank);

// Image of c under the structure map into a tower built over c's ring.
RingValue embed(const RingValue& c, const Ring& target);
// Whether target is reachable from source by the structure maps.
bool embeds_into(const Ring& source, const Ring& target);

// For IntegersMod/PrimeField and towers over a field: whether integers are
// invertible, i.e. the ring is an algebra over Q.
bool is_q_algebra(const Ring& ring);

}  // namespace efgc
