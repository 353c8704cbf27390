#include "efgc/resdual/resdual.hpp"
#include "efgc/ringkit/linalg.hpp"
#include "recorder.hpp"

namespace efgc::checks {

void residue_checks(Recorder& rec, const SuiteOptions& opt) {
  Rng rng(opt.seed ^ 0x4e5);
  for (const auto& k : residue_menu()) {
    std::string where = k->describe();
    Poly one = Poly::constant(RingValue::one(k));
    for (long i = 0; i < opt.residue_instances; ++i) {
      int dq = static_cast<int>(uniform(rng, 1, 8));
      Poly q = random_poly(k, dq, rng, true);
      Poly p = random_poly(k, static_cast<int>(uniform(rng, 0, 10)), rng);
      Poly g = random_poly(k, static_cast<int>(uniform(rng, 0, 10)), rng);
      std::string ctx = where + " q=" + q.to_string();
      rec.run("res_polynomial", [&] { return residue(p, one).is_zero(); }, ctx);
      rec.run("res_derivative", [&] { return residue_of_derivative(p, q).is_zero(); }, ctx);
      rec.run("res_log_derivative", [&] { return residue(q.derivative(), q) == RingValue::from_int(k, dq); }, ctx);
      rec.run("trace_formula",
              [&] { return residue(g * q.derivative(), q) == trace_of_multiplication(g, q); }, ctx);
    }
  }
}

void duality_checks(Recorder& rec, const SuiteOptions& opt) {
  Rng rng(opt.seed ^ 0xd0a1);
  for (const auto& k : residue_menu()) {
    std::string where = k->describe();
    for (long i = 0; i < opt.duality_instances; ++i) {
      int r = static_cast<int>(uniform(rng, 1, 8));
      Poly f = random_poly(k, r, rng, true);
      DualityAlgebra alg(f);
      std::string ctx = where + " f=" + f.to_string();
      RingValue one = RingValue::one(k);
      rec.run("theta0_det_unit", [&] {
        RingValue d = det_division_free(alg.theta0_matrix());
        return d == one || d == -one;
      }, ctx);
      rec.run("epsilon_theta0", [&] {
        for (int j = 0; j < r; ++j) {
          Functional z = alg.basis_functional(j);
          if (alg.epsilon(alg.theta0(z)) != alg.apply(z, Poly::constant(one))) return false;
        }
        return true;
      }, ctx);
      rec.run("epsilon_contraction", [&] { return alg.epsilon_contraction() == Poly::constant(one); }, ctx);
      rec.run("trace_element", [&] { return alg.theta0(alg.trace_functional()) == alg.reduce(f.derivative()); }, ctx);
      Functional phi;
      for (int j = 0; j < r; ++j) phi.values.push_back(random_value(k, rng));
      rec.run("theta0_round_trip", [&] { return alg.theta0_inverse(alg.theta0(phi)) == phi; }, ctx);
      rec.run("residue_pairing", [&] {
        auto [a, b] = residue_pairing_check(alg, phi);
        return a == b;
      }, ctx);
      Poly g = random_poly(k, static_cast<int>(uniform(rng, 0, 3)), rng, true);
      rec.run("residue_inclusion", [&] {
        auto [a, b] = residue_inclusion_check(f, f * g, phi);
        return a == b;
      }, ctx);
    }
  }
}

}  // namespace efgc::checks
