#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "scva/fock.hpp"
#include "scva/parser.hpp"
#include "support.hpp"

using namespace scva;

namespace {

Mode mode(Letter l, int gen, Rational idx) {
  return Mode{l, gen, static_cast<int>(Rational(2 * idx).get_num().get_si())};
}

State st(const SpaceSpec& sp, std::initializer_list<Mode> modes, Rational c = 1) {
  const std::vector<Mode> v(modes);
  return make_state(sp, v, c);
}

}  // namespace

TEST_CASE("make_space validation") {
  const SpaceSpec g2 = make_space(7, Sector::NS, false);
  CHECK(g2.dim == 7);
  CHECK(g2.rank() == 7);
  const SpaceSpec r2 = make_space(2, Sector::R, true);
  CHECK(r2.rank() == 1);
  CHECK_THROWS_AS(make_space(2, Sector::R, false), SpaceError);
  CHECK_THROWS_AS(make_space(3, Sector::NS, true), SpaceError);
  CHECK_THROWS_AS(make_space(6, Sector::NS, true, true), SpaceError);
  CHECK_THROWS_AS(make_space(4, Sector::NS, false, true), SpaceError);
  CHECK_THROWS_AS(make_space(0, Sector::NS, false), SpaceError);
  CHECK_NOTHROW(make_space(8, Sector::R, true, true));
}

TEST_CASE("vacuum") {
  const SpaceSpec sp = make_space(2, Sector::NS, true);
  const State vac = State::vacuum();
  const auto g = grading(sp, vac);
  REQUIRE(g.size() == 1);
  CHECK(g[0].weight == 0);
  CHECK(g[0].charge == 0);
  for (Letter l : {Letter::Phi, Letter::Psi})
    for (int gen : {1}) CHECK(apply_mode(sp, mode(l, gen, frac(1, 2)), vac).is_zero());
  for (Letter l : {Letter::B, Letter::C}) {
    CHECK(apply_mode(sp, mode(l, 1, 1), vac).is_zero());
    CHECK(apply_mode(sp, mode(l, 1, 0), vac).is_zero());
  }
}

TEST_CASE("apply_mode examples") {
  const SpaceSpec d1 = make_space(1, Sector::NS, false);
  const State a1 = st(d1, {mode(Letter::A, 1, -1)});
  CHECK(apply_mode(d1, mode(Letter::A, 1, 1), a1) == State::vacuum());
  CHECK(apply_mode(d1, mode(Letter::A, 1, 0), a1).is_zero());
  // a_2 on a_{-2}a_{-2}: 2 * multiplicity 2
  const State a22 = st(d1, {mode(Letter::A, 1, -2), mode(Letter::A, 1, -2)});
  CHECK(apply_mode(d1, mode(Letter::A, 1, 2), a22) == 4 * st(d1, {mode(Letter::A, 1, -2)}));

  // phi^1_{1/2} contracts psi^1_{-1/2}, passing phi^1_{-1/2}: sign -1.
  const SpaceSpec p2 = make_space(2, Sector::NS, true);
  const State pp = st(p2, {mode(Letter::Phi, 1, frac(-1, 2)), mode(Letter::Psi, 1, frac(-1, 2))});
  CHECK(apply_mode(p2, mode(Letter::Phi, 1, frac(1, 2)), pp) == -1 * st(p2, {mode(Letter::Phi, 1, frac(-1, 2))}));
  CHECK(apply_mode(p2, mode(Letter::Psi, 1, frac(1, 2)), pp) == st(p2, {mode(Letter::Psi, 1, frac(-1, 2))}));

  // wrong parity class
  CHECK_THROWS_AS(apply_mode(p2, mode(Letter::Phi, 1, 0), pp), SpaceError);
  const SpaceSpec r2 = make_space(2, Sector::R, true);
  CHECK_THROWS_AS(apply_mode(r2, mode(Letter::Phi, 1, frac(-1, 2)), State::vacuum()), SpaceError);
}

TEST_CASE("R-sector zero modes") {
  const SpaceSpec r2 = make_space(2, Sector::R, true);
  const Mode phi0 = mode(Letter::Phi, 1, 0);
  const Mode psi0 = mode(Letter::Psi, 1, 0);
  CHECK(is_creation(r2, phi0));
  CHECK_FALSE(is_creation(r2, psi0));
  const State s = apply_mode(r2, phi0, State::vacuum());
  CHECK(s == st(r2, {phi0}));
  CHECK(apply_mode(r2, psi0, s) == State::vacuum());
  CHECK(apply_mode(r2, phi0, s).is_zero());
}

TEST_CASE("grading examples") {
  const SpaceSpec ns = make_space(2, Sector::NS, true);
  auto g = grading(ns, st(ns, {mode(Letter::B, 1, -1)}));
  REQUIRE(g.size() == 1);
  CHECK(g[0].weight == 1);
  CHECK(g[0].charge == 0);

  const SpaceSpec r2 = make_space(2, Sector::R, true);
  g = grading(r2, st(r2, {mode(Letter::Phi, 1, 0)}));
  REQUIRE(g.size() == 1);
  CHECK(g[0].weight == frac(1, 2));
  CHECK(g[0].charge == -1);

  const SpaceSpec r4 = make_space(4, Sector::R, true);
  g = grading(r4, st(r4, {mode(Letter::Psi, 1, -1), mode(Letter::Psi, 2, -1)}));
  REQUIRE(g.size() == 1);
  CHECK(g[0].weight == 1);
  CHECK(g[0].charge == 2);

  // mixed state splits into components ordered by (weight, charge)
  const State mix = st(ns, {mode(Letter::Psi, 1, frac(-1, 2))}) + st(ns, {mode(Letter::Phi, 1, frac(-1, 2))}) +
                    st(ns, {mode(Letter::C, 1, -2)});
  g = grading(ns, mix);
  REQUIRE(g.size() == 3);
  CHECK(g[0].charge == -1);
  CHECK(g[1].charge == 1);
  CHECK(g[2].weight == 2);

  // A/B twisted weights of psi_{-1/2} (charge +1): 0 and 1
  const Monomial m = st(ns, {mode(Letter::Psi, 1, frac(-1, 2))}).begin()->first;
  CHECK(weight2(ns, m, Grading::A) == 0);
  CHECK(weight2(ns, m, Grading::B) == 2);
}

TEST_CASE("bilinearity of apply_mode") {
  std::mt19937 rng(7);
  for (const SpaceSpec& sp : {make_space(2, Sector::NS, false), make_space(2, Sector::R, true)}) {
    const auto ops = creation_modes_up_to(sp, Grading::Untwisted, 4);
    for (int i = 0; i < 50; ++i) {
      const State s = testing::random_state(sp, rng, 4, 3);
      const State t = testing::random_state(sp, rng, 4, 3);
      const Rational c = testing::random_coefficient(rng);
      const Mode cre = ops[rng() % ops.size()];
      const Mode ann{cre.letter, cre.gen, -cre.idx2};
      for (const Mode& m : {cre, ann}) {
        if (m.idx2 == 0 && is_creation(sp, ann)) continue;
        CHECK(apply_mode(sp, m, s + c * t) == apply_mode(sp, m, s) + c * apply_mode(sp, m, t));
      }
    }
  }
}

TEST_CASE("creation/annihilation pairing on the vacuum") {
  const SpaceSpec ortho = make_space(3, Sector::NS, false);
  const SpaceSpec pol = make_space(4, Sector::NS, true);
  const SpaceSpec ram = make_space(4, Sector::R, true);
  for (const SpaceSpec& sp : {ortho, pol, ram}) {
    for (const Mode& cre : creation_modes_up_to(sp, Grading::Untwisted, 6)) {
      const Letter partner = sp.partner(cre.letter);
      const Mode ann{partner, cre.gen, -cre.idx2};
      if (is_creation(sp, ann)) continue;  // R zero mode phi_0: its partner psi_0 is checked below
      const State once = apply_mode(sp, cre, State::vacuum());
      const Rational expected = cre.fermionic() ? Rational(1) : Rational(-cre.idx2 / 2);
      CHECK(apply_mode(sp, ann, once) == expected * State::vacuum());
    }
  }
  CHECK(apply_mode(ram, Mode{Letter::Psi, 2, 0}, st(ram, {Mode{Letter::Phi, 2, 0}})) == State::vacuum());
}

TEST_CASE("grading additivity under single modes") {
  std::mt19937 rng(11);
  for (const SpaceSpec& sp : {make_space(2, Sector::NS, true), make_space(2, Sector::R, true)}) {
    const auto ops = creation_modes_up_to(sp, Grading::Untwisted, 4);
    for (int i = 0; i < 60; ++i) {
      const State s = testing::random_state(sp, rng, 3, 1);
      const Monomial& ms = s.begin()->first;
      const Mode m = ops[rng() % ops.size()];
      const Mode ann{sp.partner(m.letter), m.gen, -m.idx2};
      const State up = apply_mode(sp, m, s);
      if (!up.is_zero()) {
        const Monomial& mu = up.begin()->first;
        CHECK(weight2(sp, mu) == weight2(sp, ms) + mode_weight2(sp, m));
        CHECK(charge(mu) == charge(ms) + mode_charge(m));
      }
      if (is_creation(sp, ann)) continue;
      const State down = apply_mode(sp, ann, s);
      if (!down.is_zero()) {
        const Monomial& md = down.begin()->first;
        CHECK(weight2(sp, md) == weight2(sp, ms) - mode_weight2(sp, m));
        CHECK(charge(md) == charge(ms) - mode_charge(m));
      }
    }
  }
}

TEST_CASE("fermionic reordering sign equals permutation parity") {
  const SpaceSpec sp = make_space(6, Sector::NS, true);
  std::vector<Mode> modes;
  for (int g = 1; g <= 3; ++g) {
    modes.push_back(creation_mode(sp, Letter::Phi, g));
    modes.push_back(creation_mode(sp, Letter::Psi, g, 1));
  }
  std::sort(modes.begin(), modes.end());
  const State sorted = State::of(modes);
  std::vector<int> perm(modes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Mode> shuffled;
    for (int p : perm) shuffled.push_back(modes[p]);
    // brute-force parity: count inversions
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    const Rational sign = inversions % 2 == 0 ? 1 : -1;
    CHECK(make_state(sp, shuffled) == sign * sorted);
  }
  // a repeated fermion vanishes, repeated bosons do not
  const Mode f = creation_mode(sp, Letter::Psi, 1);
  const Mode b = creation_mode(sp, Letter::B, 1);
  CHECK(st(sp, {f, f}).is_zero());
  CHECK(st(sp, {b, b}).size() == 1);
  // bosons commute with everything
  CHECK(st(sp, {b, f}) == st(sp, {f, b}));
}

TEST_CASE("canonical form idempotence") {
  std::mt19937 rng(5);
  const SpaceSpec sp = make_space(4, Sector::R, true);
  for (int i = 0; i < 50; ++i) {
    const State s = testing::random_state(sp, rng, 4, 4);
    State again;
    for (const auto& [m, c] : s) again += make_state(sp, m, c);
    CHECK(again == s);
    CHECK(std::is_sorted(s.begin()->first.begin(), s.begin()->first.end()));
  }
  State z = State::vacuum();
  z -= State::vacuum();
  CHECK(z.is_zero());
  CHECK(z.size() == 0);
}

TEST_CASE("enumeration and budget") {
  const SpaceSpec d1 = make_space(1, Sector::NS, false);
  // weight <= 1: |0>, phi_{-1/2}, a_{-1}
  CHECK(enumerate_monomials(d1, Grading::Untwisted, 2).size() == 3);
  CHECK_THROWS_AS(enumerate_monomials(make_space(4, Sector::NS, true), Grading::Untwisted, 8, 10), BudgetExceeded);
  // no charge without a polarization: the twisted weights coincide
  CHECK(enumerate_monomials(d1, Grading::A, 4) == enumerate_monomials(d1, Grading::Untwisted, 4));
}

TEST_CASE("linear change of generators") {
  const SpaceSpec sp = make_space(2, Sector::NS, false);
  const Matrix id{{1, 0}, {0, 1}};
  const Matrix swap{{0, 1}, {1, 0}};
  const State s = st(sp, {creation_mode(sp, Letter::Phi, 1), creation_mode(sp, Letter::Phi, 2)});
  CHECK(transform(sp, s, {{Letter::Phi, id}}) == s);
  CHECK(transform(sp, s, {{Letter::Phi, swap}}) == -1 * s);
  // bosons untouched when only phi is transformed
  const State a = st(sp, {creation_mode(sp, Letter::A, 1)});
  CHECK(transform(sp, a, {{Letter::Phi, swap}}) == a);
}
