#pragma once

#include <optional>
#include <vector>

#include "efgc/ringkit/matrix.hpp"
#include "efgc/ringkit/ring.hpp"

namespace efgc {

// Z, Q, Z/m or F_p at the bottom of a tower; throws UnsupportedRing for SZ2.
Ring ground_ring(const Ring& ring);

// Coordinates over a subring S of the tower above it (S may be the ring itself).
std::vector<RingValue> relative_coords(const RingValue& v, const Ring& sub);
RingValue relative_from_coords(const Ring& ring, const Ring& sub, const std::vector<RingValue>& coords);
long relative_rank(const Ring& ring, const Ring& sub);
std::vector<RingValue> relative_basis(const Ring& ring, const Ring& sub);
// Matrix over `sub` of multiplication by r; column j is r * basis_j.
Matrix relative_mult_matrix(const RingValue& r, const Ring& sub);
RingValue relative_norm(const RingValue& r, const Ring& sub);
RingValue relative_trace(const RingValue& r, const Ring& sub);
std::vector<RingValue> relative_charpoly(const RingValue& r, const Ring& sub);

std::vector<RingValue> flatten(const RingValue& v);
RingValue unflatten(const Ring& ring, const std::vector<RingValue>& coords);
std::vector<RingValue> ring_basis(const Ring& ring);
Matrix mult_matrix(const RingValue& r);

bool is_unit(const RingValue& r);
bool is_regular(const RingValue& r);
std::optional<RingValue> try_inverse(const RingValue& r);
// Throws NotInvertible.
RingValue unit_inverse(const RingValue& r);

// Additive span of vectors with coordinates in a ground ring (Z, Q, Z/m, F_p);
// over Z/m and F_p the span is taken in (Z/m)^d.
class GroundSpan {
 public:
  GroundSpan(Ring ground, long dim);
  void add(const std::vector<RingValue>& v);
  bool contains(const std::vector<RingValue>& v) const;
  long dim() const { return dim_; }

 private:
  void echelonize() const;
  Ring ground_;
  long dim_;
  bool rational_;
  mpz_class modulus_;
  mutable bool dirty_ = false;
  mutable std::vector<std::vector<mpz_class>> irows_;
  mutable std::vector<std::vector<mpq_class>> qrows_;
};

// The ideal generated by gens, as a span over the ground ring.
class IdealSpan {
 public:
  IdealSpan(const Ring& ring, const std::vector<RingValue>& gens);
  bool contains(const RingValue& target) const;

 private:
  Ring ring_;
  GroundSpan span_;
};

bool ideal_membership(const RingValue& target, const std::vector<RingValue>& gens);
bool verify_split(const RingValue& r, const RingValue& idem);

// Generators of {v : m v = 0} over the ground ring of m (Z, Q, Z/m, F_p).
std::vector<std::vector<RingValue>> kernel_basis(const Matrix& m);
bool is_injective(const Matrix& m);

}  // namespace efgc
