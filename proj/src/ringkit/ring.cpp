#include "efgc/ringkit/ring.hpp"

#include <algorithm>
#include <sstream>

namespace efgc {

namespace {

using Bits = std::vector<std::uint64_t>;

void trim_bits(Bits& b) {
  while (!b.empty() && b.back() == 0) b.pop_back();
}

bool bit(const Bits& b, int i) {
  size_t w = static_cast<size_t>(i) / 64;
  return w < b.size() && ((b[w] >> (i % 64)) & 1u);
}

int bit_degree(const Bits& b) {
  if (b.empty()) return -1;
  int top = 63;
  while (!((b.back() >> top) & 1u)) --top;
  return static_cast<int>((b.size() - 1) * 64) + top;
}

Bits xor_bits(const Bits& a, const Bits& b) {
  Bits c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) c[i] ^= a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] ^= b[i];
  trim_bits(c);
  return c;
}

Bits mul_bits(const Bits& a, const Bits& b) {
  int da = bit_degree(a), db = bit_degree(b);
  if (da < 0 || db < 0) return {};
  Bits c(static_cast<size_t>(da + db) / 64 + 1, 0);
  for (int i = 0; i <= da; ++i) {
    if (!bit(a, i)) continue;
    for (int j = 0; j <= db; ++j)
      if (bit(b, j)) c[(i + j) / 64] ^= (std::uint64_t{1} << ((i + j) % 64));
  }
  trim_bits(c);
  return c;
}

std::vector<int> xor_indices(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  std::vector<int> out;
  for (size_t i = 0; i < a.size();) {
    size_t j = i;
    while (j < a.size() && a[j] == a[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(a[i]);
    i = j;
  }
  return out;
}

// p(e) acting on sum of u_i, using e^j u_i = u_{i-j} and u_0 = 0.
std::vector<int> act_bits(const Bits& p, const std::vector<int>& m) {
  std::vector<int> raw;
  int dp = bit_degree(p);
  for (int j = 0; j <= dp; ++j) {
    if (!bit(p, j)) continue;
    for (int i : m)
      if (i - j >= 1) raw.push_back(i - j);
  }
  return xor_indices(std::move(raw), {});
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i > 0 && terms[i][0] != '-') out += '+';
    out += terms[i];
  }
  return out;
}

std::string term_text(const RingValue& c, const std::string& monomial) {
  std::string s = c.to_string();
  if (monomial.empty()) return s;
  if (s == "1") return monomial;
  if (s == "-1") return "-" + monomial;
  if (c.is_compound()) return "(" + s + ")*" + monomial;
  return s + "*" + monomial;
}

mpz_class mod_reduce(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool is_probable_prime(const mpz_class& p) {
  return mpz_probab_prime_p(p.get_mpz_t(), 30) > 0;
}

}  // namespace

Ring integers() {
  static const Ring r = [] {
    auto d = std::make_shared<RingDescriptor>();
    d->kind_ = RingKind::kIntegers;
    d->rank_ = 1;
    return Ring(d);
  }();
  return r;
}

Ring rationals() {
  static const Ring r = [] {
    auto d = std::make_shared<RingDescriptor>();
    d->kind_ = RingKind::kRationals;
    d->rank_ = 1;
    return Ring(d);
  }();
  return r;
}

Ring integers_mod(const mpz_class& m) {
  if (m < 2) throw Error(ErrorKind::kInvalidRing, "IntegersMod modulus must be >= 2");
  auto d = std::make_shared<RingDescriptor>();
  d->kind_ = RingKind::kIntegersMod;
  d->modulus_ = m;
  d->rank_ = 1;
  return d;
}

Ring prime_field(const mpz_class& p) {
  if (p < 2 || !is_probable_prime(p))
    throw Error(ErrorKind::kInvalidRing, "PrimeField characteristic must be prime");
  auto d = std::make_shared<RingDescriptor>();
  d->kind_ = RingKind::kPrimeField;
  d->modulus_ = p;
  d->rank_ = 1;
  return d;
}

std::vector<std::string> default_symbols(int rank) {
  static const char* names[] = {"v", "w", "z", "s"};
  std::vector<std::string> out;
  for (int i = 0; i < rank; ++i)
    out.push_back(rank <= 4 ? std::string(names[i]) : "v" + std::to_string(i + 1));
  return out;
}

Ring group_ring(const Ring& base, const FinAbGroup& group, std::vector<std::string> symbols) {
  RingKind bk = base->kind();
  if (bk != RingKind::kIntegers && bk != RingKind::kRationals && bk != RingKind::kPrimeField)
    throw Error(ErrorKind::kInvalidRing, "group ring base must be Z, Q or a prime field");
  if (symbols.empty()) symbols = default_symbols(group.rank());
  if (static_cast<int>(symbols.size()) != group.rank())
    throw Error(ErrorKind::kInvalidRing, "one unit symbol per group factor is required");
  auto d = std::make_shared<RingDescriptor>();
  d->kind_ = RingKind::kGroupRing;
  d->base_ = base;
  d->group_ = group;
  d->symbols_ = std::move(symbols);
  long n = group.order();
  d->add_table_.resize(n * n);
  d->neg_table_.resize(n);
  for (long i = 0; i < n; ++i) {
    GroupElement gi = group.element(i);
    d->neg_table_[i] = group.index(group.neg(gi));
    for (long j = 0; j < n; ++j) d->add_table_[i * n + j] = group.index(group.add(gi, group.element(j)));
  }
  d->rank_ = n * base->rank();
  return d;
}

Ring poly_quotient(const Ring& base, const std::vector<RingValue>& monic, std::string variable) {
  if (monic.size() < 2) throw Error(ErrorKind::kInvalidRing, "quotient modulus must have degree >= 1");
  if (!monic.back().is_one()) throw Error(ErrorKind::kInvalidRing, "quotient modulus must be monic");
  auto d = std::make_shared<RingDescriptor>();
  d->kind_ = RingKind::kPolyQuotient;
  d->base_ = base;
  for (const auto& c : monic) d->quotient_.push_back(embed(c, base));
  d->variable_ = std::move(variable);
  d->rank_ = (static_cast<long>(monic.size()) - 1) * base->rank();
  return d;
}

Ring square_zero_f2() {
  static const Ring r = [] {
    auto d = std::make_shared<RingDescriptor>();
    d->kind_ = RingKind::kSquareZeroF2;
    d->rank_ = 0;
    return Ring(d);
  }();
  return r;
}

std::string RingDescriptor::describe() const {
  switch (kind_) {
    case RingKind::kIntegers: return "Z";
    case RingKind::kRationals: return "Q";
    case RingKind::kIntegersMod: return "Z/" + modulus_.get_str();
    case RingKind::kPrimeField: return "F_" + modulus_.get_str();
    case RingKind::kGroupRing: {
      std::ostringstream os;
      os << base_->describe() << "[";
      for (size_t i = 0; i < group_.factors().size(); ++i) os << (i ? "," : "") << group_.factors()[i];
      os << "]";
      return os.str();
    }
    case RingKind::kPolyQuotient: {
      std::vector<std::string> terms;
      for (int i = 0; i <= quotient_degree(); ++i) {
        const RingValue& c = quotient_[i];
        if (c.is_zero()) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? variable_ : variable_ + "^" + std::to_string(i));
        terms.push_back(term_text(c, mono));
      }
      std::string b = base_->describe();
      if (base_->kind() == RingKind::kPolyQuotient) b = "(" + b + ")";
      return b + "[" + variable_ + "]/(" + join_terms(terms) + ")";
    }
    case RingKind::kSquareZeroF2: return "SZ2";
  }
  return "?";
}

bool same_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case RingKind::kIntegers:
    case RingKind::kRationals:
    case RingKind::kSquareZeroF2:
      return true;
    case RingKind::kIntegersMod:
    case RingKind::kPrimeField:
      return a->modulus() == b->modulus();
    case RingKind::kGroupRing:
      return a->group() == b->group() && same_ring(a->base(), b->base());
    case RingKind::kPolyQuotient: {
      if (!same_ring(a->base(), b->base())) return false;
      if (a->quotient_modulus().size() != b->quotient_modulus().size()) return false;
      for (size_t i = 0; i < a->quotient_modulus().size(); ++i)
        if (!(a->quotient_modulus()[i] == b->quotient_modulus()[i])) return false;
      return true;
    }
  }
  return false;
}

bool embeds_into(const Ring& source, const Ring& target) {
  if (same_ring(source, target)) return true;
  if (source->kind() == RingKind::kIntegers) return true;
  if (target->kind() == RingKind::kGroupRing || target->kind() == RingKind::kPolyQuotient)
    return embeds_into(source, target->base());
  return false;
}

bool is_q_algebra(const Ring& ring) {
  switch (ring->kind()) {
    case RingKind::kRationals: return true;
    case RingKind::kGroupRing:
    case RingKind::kPolyQuotient: return is_q_algebra(ring->base());
    default: return false;
  }
}

RingValue embed(const RingValue& c, const Ring& target) {
  if (same_ring(c.ring(), target)) return c;
  if (c.kind() == RingKind::kIntegers) return RingValue::from_int(target, c.integer());
  if (target->kind() == RingKind::kGroupRing || target->kind() == RingKind::kPolyQuotient) {
    RingValue inner = embed(c, target->base());
    long n = target->kind() == RingKind::kGroupRing ? target->group().order() : target->quotient_degree();
    std::vector<RingValue> coeffs(n, RingValue::zero(target->base()));
    coeffs[0] = inner;
    return RingValue::from_coeffs(target, std::move(coeffs));
  }
  if (c.kind() == RingKind::kRationals) return RingValue::from_rational(target, c.rational());
  throw Error(ErrorKind::kBaseMismatch,
              "cannot map " + c.ring()->describe() + " into " + target->describe());
}

// ---- RingValue ----

RingValue RingValue::zero(const Ring& ring) { return from_int(ring, mpz_class(0)); }

RingValue RingValue::one(const Ring& ring) { return from_int(ring, mpz_class(1)); }

RingValue RingValue::from_int(const Ring& ring, const mpz_class& n) {
  switch (ring->kind()) {
    case RingKind::kIntegers: return RingValue(ring, n);
    case RingKind::kRationals: return RingValue(ring, mpq_class(n));
    case RingKind::kIntegersMod:
    case RingKind::kPrimeField: return RingValue(ring, mod_reduce(n, ring->modulus()));
    case RingKind::kGroupRing:
    case RingKind::kPolyQuotient: {
      long len = ring->kind() == RingKind::kGroupRing ? ring->group().order() : ring->quotient_degree();
      std::vector<RingValue> coeffs(len, zero(ring->base()));
      coeffs[0] = from_int(ring->base(), n);
      return RingValue(ring, std::move(coeffs));
    }
    case RingKind::kSquareZeroF2: {
      SquareZeroElem e;
      if (mpz_odd_p(n.get_mpz_t())) e.poly = {1};
      return RingValue(ring, std::move(e));
    }
  }
  throw Error(ErrorKind::kInvalidRing, "unknown ring kind");
}

RingValue RingValue::from_rational(const Ring& ring, const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  if (c.get_den() == 1) return from_int(ring, c.get_num());
  switch (ring->kind()) {
    case RingKind::kRationals: return RingValue(ring, c);
    case RingKind::kIntegersMod:
    case RingKind::kPrimeField: {
      mpz_class inv;
      mpz_class den = mod_reduce(c.get_den(), ring->modulus());
      if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), ring->modulus().get_mpz_t()) == 0)
        throw Error(ErrorKind::kNotInvertible, "denominator not invertible in " + ring->describe());
      return RingValue(ring, mod_reduce(c.get_num() * inv, ring->modulus()));
    }
    case RingKind::kGroupRing:
    case RingKind::kPolyQuotient: return embed(from_rational(ring->base(), c), ring);
    case RingKind::kSquareZeroF2:
      if (mpz_even_p(c.get_den().get_mpz_t()))
        throw Error(ErrorKind::kNotInvertible, "denominator not invertible in SZ2");
      return from_int(ring, c.get_num());
    case RingKind::kIntegers: break;
  }
  throw Error(ErrorKind::kNotInvertible, "denominator not invertible in " + ring->describe());
}

RingValue RingValue::from_coeffs(const Ring& ring, std::vector<RingValue> coeffs) {
  if (ring->kind() == RingKind::kGroupRing) {
    if (static_cast<long>(coeffs.size()) != ring->group().order())
      throw Error(ErrorKind::kDimensionMismatch, "group ring coefficient count");
    for (auto& c : coeffs) c = embed(c, ring->base());
    return RingValue(ring, std::move(coeffs));
  }
  if (ring->kind() == RingKind::kPolyQuotient) {
    long m = ring->quotient_degree();
    for (auto& c : coeffs) c = embed(c, ring->base());
    const auto& mod = ring->quotient_modulus();
    for (long d = static_cast<long>(coeffs.size()) - 1; d >= m; --d) {
      RingValue c = coeffs[d];
      if (c.is_zero()) continue;
      for (long i = 0; i < m; ++i)
        if (!mod[i].is_zero()) coeffs[d - m + i] -= c * mod[i];
    }
    coeffs.resize(m, zero(ring->base()));
    return RingValue(ring, std::move(coeffs));
  }
  throw Error(ErrorKind::kInvalidRing, "from_coeffs needs a group ring or quotient");
}

RingValue RingValue::from_square_zero(const Ring& ring, SquareZeroElem elem) {
  if (ring->kind() != RingKind::kSquareZeroF2)
    throw Error(ErrorKind::kInvalidRing, "not the square-zero ring");
  trim_bits(elem.poly);
  elem.module = xor_indices(std::move(elem.module), {});
  elem.module.erase(std::remove_if(elem.module.begin(), elem.module.end(), [](int i) { return i <= 0; }),
                    elem.module.end());
  return RingValue(ring, std::move(elem));
}

RingValue RingValue::group_basis(const Ring& ring, long index) {
  if (ring->kind() != RingKind::kGroupRing) throw Error(ErrorKind::kInvalidRing, "not a group ring");
  std::vector<RingValue> coeffs(ring->group().order(), zero(ring->base()));
  coeffs.at(index) = one(ring->base());
  return RingValue(ring, std::move(coeffs));
}

RingValue RingValue::generator(const Ring& ring) {
  if (ring->kind() != RingKind::kPolyQuotient) throw Error(ErrorKind::kInvalidRing, "not a quotient");
  std::vector<RingValue> coeffs(2, zero(ring->base()));
  coeffs[1] = one(ring->base());
  return from_coeffs(ring, std::move(coeffs));
}

RingKind RingValue::kind() const {
  if (!ring_) throw Error(ErrorKind::kInvalidRing, "uninitialised ring value");
  return ring_->kind();
}

bool RingValue::is_zero() const {
  switch (kind()) {
    case RingKind::kIntegers:
    case RingKind::kIntegersMod:
    case RingKind::kPrimeField: return std::get<mpz_class>(data_) == 0;
    case RingKind::kRationals: return std::get<mpq_class>(data_) == 0;
    case RingKind::kGroupRing:
    case RingKind::kPolyQuotient:
      for (const auto& c : std::get<std::vector<RingValue>>(data_))
        if (!c.is_zero()) return false;
      return true;
    case RingKind::kSquareZeroF2: {
      const auto& e = std::get<SquareZeroElem>(data_);
      return e.poly.empty() && e.module.empty();
    }
  }
  return false;
}

bool RingValue::is_one() const {
  switch (kind()) {
    case RingKind::kIntegers:
    case RingKind::kIntegersMod:
    case RingKind::kPrimeField: return std::get<mpz_class>(data_) == 1;
    case RingKind::kRationals: return std::get<mpq_class>(data_) == 1;
    case RingKind::kGroupRing:
    case RingKind::kPolyQuotient: {
      const auto& v = std::get<std::vector<RingValue>>(data_);
      if (!v[0].is_one()) return false;
      for (size_t i = 1; i < v.size(); ++i)
        if (!v[i].is_zero()) return false;
      return true;
    }
    case RingKind::kSquareZeroF2: {
      const auto& e = std::get<SquareZeroElem>(data_);
      return e.poly == Bits{1} && e.module.empty();
    }
  }
  return false;
}

bool RingValue::is_minus_one() const { return (-*this).is_one(); }

const mpz_class& RingValue::integer() const {
  if (!std::holds_alternative<mpz_class>(data_)) throw Error(ErrorKind::kInvalidRing, "not an integer value");
  return std::get<mpz_class>(data_);
}

const mpq_class& RingValue::rational() const {
  if (!std::holds_alternative<mpq_class>(data_)) throw Error(ErrorKind::kInvalidRing, "not a rational value");
  return std::get<mpq_class>(data_);
}

const std::vector<RingValue>& RingValue::coeffs() const {
  if (!std::holds_alternative<std::vector<RingValue>>(data_))
    throw Error(ErrorKind::kInvalidRing, "value has no coefficient vector");
  return std::get<std::vector<RingValue>>(data_);
}

const SquareZeroElem& RingValue::square_zero() const {
  if (!std::holds_alternative<SquareZeroElem>(data_))
    throw Error(ErrorKind::kInvalidRing, "not a square-zero value");
  return std::get<SquareZeroElem>(data_);
}

void RingValue::check_same(const RingValue& o) const {
  if (ring_ == o.ring_) return;
  if (!ring_ || !o.ring_ || !same_ring(ring_, o.ring_))
    throw Error(ErrorKind::kBaseMismatch,
                "mixing " + (ring_ ? ring_->describe() : std::string("<none>")) + " and " +
                    (o.ring_ ? o.ring_->describe() : std::string("<none>")));
}

RingValue RingValue::operator-() const {
  switch (kind()) {
    case RingKind::kIntegers: return RingValue(ring_, mpz_class(-integer()));
    case RingKind::kRationals: return RingValue(ring_, mpq_class(-rational()));
    case RingKind::kIntegersMod:
    case RingKind::kPrimeField: return RingValue(ring_, mod_reduce(-integer(), ring_->modulus()));
    case RingKind::kGroupRing:
    case RingKind::kPolyQuotient: {
      std::vector<RingValue> v = coeffs();
      for (auto& c : v) c = -c;
      return RingValue(ring_, std::move(v));
    }
    case RingKind::kSquareZeroF2: return *this;
  }
  return *this;
}

RingValue& RingValue::operator+=(const RingValue& o) {
  check_same(o);
  switch (kind()) {
    case RingKind::kIntegers: std::get<mpz_class>(data_) += o.integer(); break;
    case RingKind::kRationals: std::get<mpq_class>(data_) += o.rational(); break;
    case RingKind::kIntegersMod:
    case RingKind::kPrimeField: {
      auto& z = std::get<mpz_class>(data_);
      z += o.integer();
      if (z >= ring_->modulus()) z -= ring_->modulus();
      break;
    }
    case RingKind::kGroupRing:
    case RingKind::kPolyQuotient: {
      auto& v = std::get<std::vector<RingValue>>(data_);
      const auto& w = o.coeffs();
      for (size_t i = 0; i < v.size(); ++i) v[i] += w[i];
      break;
    }
    case RingKind::kSquareZeroF2: {
      auto& e = std::get<SquareZeroElem>(data_);
      const auto& f = o.square_zero();
      e.poly = xor_bits(e.poly, f.poly);
      e.module = xor_indices(std::move(e.module), f.module);
      break;
    }
  }
  return *this;
}

RingValue& RingValue::operator-=(const RingValue& o) {
  check_same(o);
  switch (kind()) {
    case RingKind::kIntegers: std::get<mpz_class>(data_) -= o.integer(); break;
    case RingKind::kRationals: std::get<mpq_class>(data_) -= o.rational(); break;
    case RingKind::kIntegersMod:
    case RingKind::kPrimeField: {
      auto& z = std::get<mpz_class>(data_);
      z -= o.integer();
      if (z < 0) z += ring_->modulus();
      break;
    }
    case RingKind::kGroupRing:
    case RingKind::kPolyQuotient: {
      auto& v = std::get<std::vector<RingValue>>(data_);
      const auto& w = o.coeffs();
      for (size_t i = 0; i < v.size(); ++i) v[i] -= w[i];
      break;
    }
    case RingKind::kSquareZeroF2: *this += o; break;
  }
  return *this;
}

RingValue operator*(const RingValue& a, const RingValue& b) {
  a.check_same(b);
  const Ring& ring = a.ring_;
  switch (ring->kind()) {
    case RingKind::kIntegers: return RingValue(ring, mpz_class(a.integer() * b.integer()));
    case RingKind::kRationals: return RingValue(ring, mpq_class(a.rational() * b.rational()));
    case RingKind::kIntegersMod:
    case RingKind::kPrimeField: return RingValue(ring, mod_reduce(a.integer() * b.integer(), ring->modulus()));
    case RingKind::kGroupRing: {
      const auto& x = a.coeffs();
      const auto& y = b.coeffs();
      long n = static_cast<long>(x.size());
      std::vector<RingValue> out(n, RingValue::zero(ring->base()));
      for (long i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (long j = 0; j < n; ++j) {
          if (y[j].is_zero()) continue;
          out[ring->group_add(i, j)] += x[i] * y[j];
        }
      }
      return RingValue(ring, std::move(out));
    }
    case RingKind::kPolyQuotient: {
      const auto& x = a.coeffs();
      const auto& y = b.coeffs();
      long m = static_cast<long>(x.size());
      std::vector<RingValue> prod(2 * m - 1, RingValue::zero(ring->base()));
      for (long i = 0; i < m; ++i) {
        if (x[i].is_zero()) continue;
        for (long j = 0; j < m; ++j) {
          if (y[j].is_zero()) continue;
          prod[i + j] += x[i] * y[j];
        }
      }
      return RingValue::from_coeffs(ring, std::move(prod));
    }
    case RingKind::kSquareZeroF2: {
      const auto& x = a.square_zero();
      const auto& y = b.square_zero();
      SquareZeroElem e;
      e.poly = mul_bits(x.poly, y.poly);
      e.module = xor_indices(act_bits(x.poly, y.module), act_bits(y.poly, x.module));
      return RingValue(ring, std::move(e));
    }
  }
  throw Error(ErrorKind::kInvalidRing, "unknown ring kind");
}

RingValue& RingValue::operator*=(const RingValue& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const RingValue& a, const RingValue& b) {
  if (!a.ring_ || !b.ring_) return !a.ring_ && !b.ring_;
  if (a.ring_ != b.ring_ && !same_ring(a.ring_, b.ring_)) return false;
  return a.data_ == b.data_;
}

RingValue RingValue::pow(unsigned long e) const {
  RingValue result = one(ring_);
  RingValue base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool RingValue::is_compound() const {
  std::string s = to_string();
  return s.find_first_of("+-", 1) != std::string::npos;
}

std::string RingValue::to_string() const {
  switch (kind()) {
    case RingKind::kIntegers:
    case RingKind::kIntegersMod:
    case RingKind::kPrimeField: return integer().get_str();
    case RingKind::kRationals: return rational().get_str();
    case RingKind::kGroupRing: {
      const FinAbGroup& g = ring_->group();
      std::vector<std::string> terms;
      const auto& v = coeffs();
      for (long i = 0; i < static_cast<long>(v.size()); ++i) {
        if (v[i].is_zero()) continue;
        GroupElement el = g.element(i);
        std::string mono;
        for (int k = 0; k < g.rank(); ++k) {
          if (el[k] == 0) continue;
          if (!mono.empty()) mono += "*";
          mono += ring_->symbols()[k];
          if (el[k] > 1) mono += "^" + std::to_string(el[k]);
        }
        terms.push_back(term_text(v[i], mono));
      }
      return join_terms(terms);
    }
    case RingKind::kPolyQuotient: {
      std::vector<std::string> terms;
      const auto& v = coeffs();
      const std::string& var = ring_->variable();
      for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        terms.push_back(term_text(v[i], mono));
      }
      return join_terms(terms);
    }
    case RingKind::kSquareZeroF2: {
      const auto& e = square_zero();
      std::vector<std::string> terms;
      int d = bit_degree(e.poly);
      for (int i = 0; i <= d; ++i) {
        if (!bit(e.poly, i)) continue;
        terms.push_back(i == 0 ? "1" : (i == 1 ? "e" : "e^" + std::to_string(i)));
      }
      for (int i : e.module) terms.push_back("u" + std::to_string(i));
      return join_terms(terms);
    }
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const RingValue& v) { return os << v.to_string(); }

}  // namespace efgc
