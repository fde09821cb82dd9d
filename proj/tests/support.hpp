// Shared helpers for the unit tests and the acceptance binary: random states
// and the randomized axiom suite.
#ifndef SCVA_TESTS_SUPPORT_HPP
#define SCVA_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "scva/fock.hpp"
#include "scva/report.hpp"
#include "scva/structures.hpp"
#include "scva/vertex.hpp"

namespace scva::testing {

inline Rational random_coefficient(std::mt19937& rng) {
  static const Rational pool[] = {1, -1, 2, frac(1, 2), frac(-3, 2), 3, frac(2, 3)};
  return pool[std::uniform_int_distribution<std::size_t>(0, std::size(pool) - 1)(rng)];
}

// Random nonzero state of fixed fermion parity, made of up to `terms`
// monomials of weight <= max_weight2 / 2. homogeneous: all terms share the
// weight and charge of the first one drawn.
inline State random_state(const SpaceSpec& sp, std::mt19937& rng, int max_weight2, int terms = 3,
                          bool homogeneous = false) {
  const auto basis = enumerate_monomials(sp, Grading::Untwisted, max_weight2);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  const Monomial first = basis[pick(rng)];
  State s = State::of(first, random_coefficient(rng));
  for (int t = 1; t < terms; ++t) {
    for (int tries = 0; tries < 20; ++tries) {
      const Monomial& m = basis[pick(rng)];
      if (is_odd(m) != is_odd(first)) continue;
      if (homogeneous && (weight2(sp, m) != weight2(sp, first) || charge(m) != charge(first))) continue;
      s += State::of(m, random_coefficient(rng));
      break;
    }
  }
  return s.is_zero() ? State::of(first) : s;
}

// Every identity below is checked exactly, one Report entry per identity.
//   vacuum:       a_(n)|0> = 0 (n >= 0), a_(-1)|0> = a
//   translation:  (Ta)_(n) b = -n a_(n-1) b
//   skew:         a_(n) b = p sum (-1)^{n+i+1} T^(i) b_(n+i) a
//   commutator:   [a_(m), b_(n)] c = sum binom(m, j) (a_(j) b)_(m+n-j) c
//   grading:      a_(n) b homogeneous of weight wa + wb - n - 1, charge qa + qb
inline Report axiom_suite(const SpaceSpec& sp, int instances, unsigned seed) {
  Report rep("axioms, " + describe(sp));
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> small(-1, 1);
  const State vac = State::vacuum();
  for (int i = 0; i < instances; ++i) {
    const std::string tag = "#" + std::to_string(i);
    const State a = random_state(sp, rng, 4, 2);
    const State b = random_state(sp, rng, 4, 2);
    const State c = random_state(sp, rng, 2, 2);

    rep.expect("vacuum.creation" + tag, nth_product(sp, a, vac, -1), a);
    rep.expect("vacuum.annihilation" + tag, nth_product(sp, a, vac, std::uniform_int_distribution<int>(0, 3)(rng)), {});
    rep.expect("vacuum.unit" + tag, nth_product(sp, vac, b, -1), b);

    const long n = std::uniform_int_distribution<long>(-2, 2)(rng);
    rep.expect("translation" + tag, nth_product(sp, translate(sp, a), b, n),
               Rational(-n) * nth_product(sp, a, b, n - 1));

    rep.merge(skew_symmetry_check(sp, a, b, 1), "skew" + tag + ".");
    rep.merge(commutator_check(sp, a, b, small(rng), small(rng), c), "commutator" + tag + ".");

    const State ha = random_state(sp, rng, 4, 2, true);
    const State hb = random_state(sp, rng, 4, 2, true);
    const GradedComponent ga = grading(sp, ha).front();
    const GradedComponent gb = grading(sp, hb).front();
    const long k = std::uniform_int_distribution<long>(-1, 2)(rng);
    const State prod = nth_product(sp, ha, hb, k);
    const Rational w = ga.weight + gb.weight - k - 1;
    const int w2 = static_cast<int>(Rational(2 * w).get_num().get_si());
    rep.expect("grading" + tag, w < 0 ? State{} : project(sp, prod, w2, ga.charge + gb.charge), prod);
  }
  return rep;
}

}  // namespace scva::testing

#endif  // SCVA_TESTS_SUPPORT_HPP
