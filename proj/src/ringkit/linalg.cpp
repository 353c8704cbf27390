#include "efgc/ringkit/linalg.hpp"

#include <algorithm>

namespace efgc {

namespace {

bool is_tower(const Ring& r) { return r->kind() == RingKind::kGroupRing || r->kind() == RingKind::kPolyQuotient; }

bool integer_like(const Ring& g) { return g->kind() != RingKind::kRationals; }

mpz_class lift(const RingValue& v) { return v.integer(); }

// Echelon form over Z on columns [0, ncols). Returns the number of pivot rows;
// those come first, with strictly increasing pivot columns and positive pivots.
long echelon_int(std::vector<std::vector<mpz_class>>& rows, long ncols, std::vector<long>& pivot_cols) {
  long top = 0;
  long nrows = static_cast<long>(rows.size());
  for (long col = 0; col < ncols && top < nrows; ++col) {
    while (true) {
      long best = -1;
      for (long i = top; i < nrows; ++i) {
        if (rows[i][col] == 0) continue;
        if (best < 0 || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best < 0) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      const mpz_class piv = rows[top][col];
      for (long i = top + 1; i < nrows; ++i) {
        if (rows[i][col] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), piv.get_mpz_t());
        for (size_t j = col; j < rows[i].size(); ++j) rows[i][j] -= q * rows[top][j];
        if (rows[i][col] != 0) done = false;
      }
      if (done) {
        if (rows[top][col] < 0)
          for (auto& e : rows[top]) e = -e;
        pivot_cols.push_back(col);
        ++top;
        break;
      }
    }
  }
  return top;
}

long echelon_rat(std::vector<std::vector<mpq_class>>& rows, long ncols, std::vector<long>& pivot_cols) {
  long top = 0;
  long nrows = static_cast<long>(rows.size());
  for (long col = 0; col < ncols && top < nrows; ++col) {
    long best = -1;
    for (long i = top; i < nrows; ++i)
      if (rows[i][col] != 0) {
        best = i;
        break;
      }
    if (best < 0) continue;
    std::swap(rows[top], rows[best]);
    mpq_class inv = 1 / rows[top][col];
    for (size_t j = col; j < rows[top].size(); ++j) rows[top][j] *= inv;
    for (long i = top + 1; i < nrows; ++i) {
      if (rows[i][col] == 0) continue;
      mpq_class q = rows[i][col];
      for (size_t j = col; j < rows[i].size(); ++j) rows[i][j] -= q * rows[top][j];
    }
    pivot_cols.push_back(col);
    ++top;
  }
  return top;
}

}  // namespace

Ring ground_ring(const Ring& ring) {
  switch (ring->kind()) {
    case RingKind::kIntegers:
    case RingKind::kRationals:
    case RingKind::kIntegersMod:
    case RingKind::kPrimeField: return ring;
    case RingKind::kGroupRing:
    case RingKind::kPolyQuotient: return ground_ring(ring->base());
    case RingKind::kSquareZeroF2: break;
  }
  throw Error(ErrorKind::kUnsupportedRing, "SZ2 has infinite rank over F_2");
}

std::vector<RingValue> relative_coords(const RingValue& v, const Ring& sub) {
  if (same_ring(v.ring(), sub)) return {v};
  if (!is_tower(v.ring()))
    throw Error(ErrorKind::kBaseMismatch, sub->describe() + " is not below " + v.ring()->describe());
  std::vector<RingValue> out;
  for (const auto& c : v.coeffs()) {
    auto part = relative_coords(c, sub);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

long relative_rank(const Ring& ring, const Ring& sub) {
  if (same_ring(ring, sub)) return 1;
  if (!is_tower(ring)) throw Error(ErrorKind::kBaseMismatch, sub->describe() + " is not below " + ring->describe());
  long outer = ring->kind() == RingKind::kGroupRing ? ring->group().order() : ring->quotient_degree();
  return outer * relative_rank(ring->base(), sub);
}

namespace {

RingValue from_coords_at(const Ring& ring, const Ring& sub, const std::vector<RingValue>& coords, size_t& pos) {
  if (same_ring(ring, sub)) return embed(coords.at(pos++), ring);
  long outer = ring->kind() == RingKind::kGroupRing ? ring->group().order() : ring->quotient_degree();
  std::vector<RingValue> cs;
  cs.reserve(outer);
  for (long i = 0; i < outer; ++i) cs.push_back(from_coords_at(ring->base(), sub, coords, pos));
  return RingValue::from_coeffs(ring, std::move(cs));
}

}  // namespace

RingValue relative_from_coords(const Ring& ring, const Ring& sub, const std::vector<RingValue>& coords) {
  if (static_cast<long>(coords.size()) != relative_rank(ring, sub))
    throw Error(ErrorKind::kDimensionMismatch, "coordinate count does not match rank");
  size_t pos = 0;
  return from_coords_at(ring, sub, coords, pos);
}

std::vector<RingValue> relative_basis(const Ring& ring, const Ring& sub) {
  long n = relative_rank(ring, sub);
  std::vector<RingValue> out;
  for (long i = 0; i < n; ++i) {
    std::vector<RingValue> e(n, RingValue::zero(sub));
    e[i] = RingValue::one(sub);
    out.push_back(relative_from_coords(ring, sub, e));
  }
  return out;
}

Matrix relative_mult_matrix(const RingValue& r, const Ring& sub) {
  auto basis = relative_basis(r.ring(), sub);
  long n = static_cast<long>(basis.size());
  Matrix m(sub, n, n);
  for (long j = 0; j < n; ++j) {
    auto col = relative_coords(r * basis[j], sub);
    for (long i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

RingValue relative_norm(const RingValue& r, const Ring& sub) { return det_division_free(relative_mult_matrix(r, sub)); }

RingValue relative_trace(const RingValue& r, const Ring& sub) { return trace(relative_mult_matrix(r, sub)); }

std::vector<RingValue> relative_charpoly(const RingValue& r, const Ring& sub) {
  return charpoly(relative_mult_matrix(r, sub));
}

std::vector<RingValue> flatten(const RingValue& v) { return relative_coords(v, ground_ring(v.ring())); }

RingValue unflatten(const Ring& ring, const std::vector<RingValue>& coords) {
  return relative_from_coords(ring, ground_ring(ring), coords);
}

std::vector<RingValue> ring_basis(const Ring& ring) { return relative_basis(ring, ground_ring(ring)); }

Matrix mult_matrix(const RingValue& r) { return relative_mult_matrix(r, ground_ring(r.ring())); }

namespace {

bool ground_is_unit(const RingValue& d) {
  switch (d.kind()) {
    case RingKind::kIntegers: return d.integer() == 1 || d.integer() == -1;
    case RingKind::kRationals:
    case RingKind::kPrimeField: return !d.is_zero();
    case RingKind::kIntegersMod: {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), d.integer().get_mpz_t(), d.ring()->modulus().get_mpz_t());
      return g == 1;
    }
    default: break;
  }
  throw Error(ErrorKind::kUnsupportedRing, "not a ground ring");
}

RingValue ground_inverse(const RingValue& d) {
  switch (d.kind()) {
    case RingKind::kIntegers: return d;  // +-1
    case RingKind::kRationals: return RingValue::from_rational(d.ring(), 1 / d.rational());
    case RingKind::kPrimeField:
    case RingKind::kIntegersMod: {
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), d.integer().get_mpz_t(), d.ring()->modulus().get_mpz_t());
      return RingValue::from_int(d.ring(), inv);
    }
    default: break;
  }
  throw Error(ErrorKind::kUnsupportedRing, "not a ground ring");
}

}  // namespace

bool is_unit(const RingValue& r) {
  if (r.kind() == RingKind::kSquareZeroF2) throw Error(ErrorKind::kUnsupportedRing, "is_unit on SZ2");
  if (!is_tower(r.ring())) return ground_is_unit(r);
  if (r.is_one() || r.is_minus_one()) return true;
  return ground_is_unit(det_division_free(mult_matrix(r)));
}

bool is_regular(const RingValue& r) {
  if (r.kind() == RingKind::kSquareZeroF2) throw Error(ErrorKind::kUnsupportedRing, "is_regular on SZ2");
  Ring g = ground_ring(r.ring());
  if (g->kind() == RingKind::kIntegersMod) {
    if (!is_tower(r.ring())) return ground_is_unit(r);
    return is_injective(mult_matrix(r));
  }
  if (!is_tower(r.ring())) return !r.is_zero();
  return !det_division_free(mult_matrix(r)).is_zero();
}

std::optional<RingValue> try_inverse(const RingValue& r) {
  if (r.is_one() || r.is_minus_one()) return r;
  if (r.kind() == RingKind::kSquareZeroF2) {
    // Units are exactly 1 + m with m in M, and (1 + m)^2 = 1.
    const auto& e = r.square_zero();
    if (e.poly.size() == 1 && e.poly[0] == 1) return r;
    return std::nullopt;
  }
  if (!is_tower(r.ring())) {
    if (!ground_is_unit(r)) return std::nullopt;
    return ground_inverse(r);
  }
  Matrix m = mult_matrix(r);
  RingValue d = det_division_free(m);
  if (!ground_is_unit(d)) return std::nullopt;
  Matrix adj = adjugate(m);
  RingValue dinv = ground_inverse(d);
  auto one = flatten(RingValue::one(r.ring()));
  std::vector<RingValue> w(one.size(), RingValue::zero(m.ring()));
  for (size_t i = 0; i < w.size(); ++i) {
    for (size_t j = 0; j < one.size(); ++j)
      if (!one[j].is_zero()) w[i] += adj(i, j) * one[j];
    w[i] *= dinv;
  }
  return unflatten(r.ring(), w);
}

RingValue unit_inverse(const RingValue& r) {
  auto inv = try_inverse(r);
  if (!inv) throw Error(ErrorKind::kNotInvertible, r.to_string() + " is not a unit of " + r.ring()->describe());
  return *inv;
}

// ---- spans ----

GroundSpan::GroundSpan(Ring ground, long dim)
    : ground_(std::move(ground)), dim_(dim), rational_(!integer_like(ground_)) {
  if (ground_->kind() == RingKind::kIntegersMod || ground_->kind() == RingKind::kPrimeField) {
    modulus_ = ground_->modulus();
    for (long i = 0; i < dim_; ++i) {
      std::vector<mpz_class> row(dim_, 0);
      row[i] = modulus_;
      irows_.push_back(std::move(row));
    }
    dirty_ = true;
  }
}

void GroundSpan::add(const std::vector<RingValue>& v) {
  if (static_cast<long>(v.size()) != dim_) throw Error(ErrorKind::kDimensionMismatch, "span vector length");
  bool nonzero = false;
  for (const auto& c : v) nonzero = nonzero || !c.is_zero();
  if (!nonzero) return;
  if (rational_) {
    std::vector<mpq_class> row;
    for (const auto& c : v) row.push_back(c.rational());
    qrows_.push_back(std::move(row));
  } else {
    std::vector<mpz_class> row;
    for (const auto& c : v) row.push_back(lift(c));
    irows_.push_back(std::move(row));
  }
  dirty_ = true;
}

void GroundSpan::echelonize() const {
  if (!dirty_) return;
  std::vector<long> piv;
  if (rational_) {
    long top = echelon_rat(qrows_, dim_, piv);
    qrows_.resize(top);
  } else {
    long top = echelon_int(irows_, dim_, piv);
    irows_.resize(top);
  }
  dirty_ = false;
}

bool GroundSpan::contains(const std::vector<RingValue>& v) const {
  if (static_cast<long>(v.size()) != dim_) throw Error(ErrorKind::kDimensionMismatch, "span vector length");
  echelonize();
  if (rational_) {
    std::vector<mpq_class> t;
    for (const auto& c : v) t.push_back(c.rational());
    size_t pi = 0;
    for (long col = 0; col < dim_; ++col) {
      if (pi < qrows_.size() && qrows_[pi][col] != 0) {
        mpq_class q = t[col];
        if (q != 0)
          for (long j = col; j < dim_; ++j) t[j] -= q * qrows_[pi][j];
        ++pi;
      } else if (t[col] != 0) {
        return false;
      }
    }
    return true;
  }
  std::vector<mpz_class> t;
  for (const auto& c : v) t.push_back(lift(c));
  size_t pi = 0;
  for (long col = 0; col < dim_; ++col) {
    if (pi < irows_.size() && irows_[pi][col] != 0) {
      const mpz_class& p = irows_[pi][col];
      if (t[col] != 0) {
        if (!mpz_divisible_p(t[col].get_mpz_t(), p.get_mpz_t())) return false;
        mpz_class q = t[col] / p;
        for (long j = col; j < dim_; ++j) t[j] -= q * irows_[pi][j];
      }
      ++pi;
    } else if (t[col] != 0) {
      return false;
    }
  }
  return true;
}

IdealSpan::IdealSpan(const Ring& ring, const std::vector<RingValue>& gens)
    : ring_(ring), span_(ground_ring(ring), ring->rank()) {
  auto basis = ring_basis(ring);
  for (const auto& g : gens) {
    RingValue gg = embed(g, ring);
    if (gg.is_zero()) continue;
    for (const auto& b : basis) span_.add(flatten(gg * b));
  }
}

bool IdealSpan::contains(const RingValue& target) const { return span_.contains(flatten(embed(target, ring_))); }

bool ideal_membership(const RingValue& target, const std::vector<RingValue>& gens) {
  if (target.kind() == RingKind::kSquareZeroF2) throw Error(ErrorKind::kUnsupportedRing, "ideals in SZ2");
  if (target.is_zero()) return true;
  return IdealSpan(target.ring(), gens).contains(target);
}

bool verify_split(const RingValue& r, const RingValue& idem) {
  if (!(idem * idem == idem)) return false;
  return ideal_membership(r, {idem}) && ideal_membership(idem, {r});
}

std::vector<std::vector<RingValue>> kernel_basis(const Matrix& m) {
  const Ring& g = m.ring();
  long rows = m.rows(), cols = m.cols();
  std::vector<std::vector<RingValue>> out;
  if (!integer_like(g)) {
    std::vector<std::vector<mpq_class>> aug;
    for (long j = 0; j < cols; ++j) {
      std::vector<mpq_class> row(rows + cols, 0);
      for (long i = 0; i < rows; ++i) row[i] = m(i, j).rational();
      row[rows + j] = 1;
      aug.push_back(std::move(row));
    }
    std::vector<long> piv;
    long top = echelon_rat(aug, rows, piv);
    for (size_t k = top; k < aug.size(); ++k) {
      std::vector<RingValue> v;
      for (long j = 0; j < cols; ++j) v.push_back(RingValue::from_rational(g, aug[k][rows + j]));
      out.push_back(std::move(v));
    }
    return out;
  }
  std::vector<std::vector<mpz_class>> aug;
  for (long j = 0; j < cols; ++j) {
    std::vector<mpz_class> row(rows + cols, 0);
    for (long i = 0; i < rows; ++i) row[i] = lift(m(i, j));
    row[rows + j] = 1;
    aug.push_back(std::move(row));
  }
  if (g->kind() == RingKind::kIntegersMod || g->kind() == RingKind::kPrimeField) {
    for (long i = 0; i < rows; ++i) {
      std::vector<mpz_class> row(rows + cols, 0);
      row[i] = g->modulus();
      aug.push_back(std::move(row));
    }
  }
  std::vector<long> piv;
  long top = echelon_int(aug, rows, piv);
  for (size_t k = top; k < aug.size(); ++k) {
    std::vector<RingValue> v;
    bool nonzero = false;
    for (long j = 0; j < cols; ++j) {
      v.push_back(RingValue::from_int(g, aug[k][rows + j]));
      nonzero = nonzero || !v.back().is_zero();
    }
    if (nonzero) out.push_back(std::move(v));
  }
  return out;
}

bool is_injective(const Matrix& m) { return kernel_basis(m).empty(); }

}  // namespace efgc
