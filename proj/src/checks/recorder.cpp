#include "recorder.hpp"

#include "efgc/abelian/group.hpp"

namespace efgc::checks {

PropertyResult& Recorder::slot(const std::string& name) {
  for (auto& p : out_)
    if (p.suite == suite_ && p.name == name) return p;
  out_.push_back(PropertyResult{suite_, name, 0, 0, ""});
  return out_.back();
}

void Recorder::record(const std::string& name, bool ok, const std::string& detail) {
  PropertyResult& p = slot(name);
  ++p.cases;
  if (!ok) {
    if (p.failures == 0) p.first_failure = detail.empty() ? "case " + std::to_string(p.cases) : detail;
    ++p.failures;
  }
}

void Recorder::run(const std::string& name, const std::function<bool()>& body, const std::string& detail) {
  bool ok = false;
  std::string why = detail;
  try {
    ok = body();
  } catch (const Error& e) {
    why = detail + (detail.empty() ? "" : ": ") + e.what();
  }
  record(name, ok, why);
}

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

RingValue random_value(const Ring& ring, Rng& rng, long bound) {
  switch (ring->kind()) {
    case RingKind::kIntegers: return RingValue::from_int(ring, uniform(rng, -bound, bound));
    case RingKind::kRationals:
      return RingValue::from_rational(ring, mpq_class(uniform(rng, -bound, bound), uniform(rng, 1, 3)));
    case RingKind::kIntegersMod:
    case RingKind::kPrimeField: return RingValue::from_int(ring, uniform(rng, 0, ring->modulus().get_si() - 1));
    case RingKind::kGroupRing:
    case RingKind::kPolyQuotient: {
      long n = ring->kind() == RingKind::kGroupRing ? ring->group().order() : ring->quotient_degree();
      std::vector<RingValue> cs;
      for (long i = 0; i < n; ++i) cs.push_back(random_value(ring->base(), rng, bound));
      return RingValue::from_coeffs(ring, std::move(cs));
    }
    case RingKind::kSquareZeroF2: {
      SquareZeroElem e;
      e.poly = {static_cast<std::uint64_t>(uniform(rng, 0, 15))};
      for (int i = 1; i <= 6; ++i)
        if (uniform(rng, 0, 1)) e.module.push_back(i);
      return RingValue::from_square_zero(ring, e);
    }
  }
  return RingValue::zero(ring);
}

Poly random_poly(const Ring& ring, int degree, Rng& rng, bool monic) {
  std::vector<RingValue> cs;
  for (int i = 0; i <= degree; ++i) cs.push_back(random_value(ring, rng));
  if (monic) cs.back() = RingValue::one(ring);
  return Poly(ring, cs);
}

std::vector<Ring> residue_menu() {
  return {integers(), rationals(), prime_field(5), integers_mod(6), group_ring(integers(), FinAbGroup({2}))};
}

}  // namespace efgc::checks
