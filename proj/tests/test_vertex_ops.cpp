#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "scva/holonomy.hpp"
#include "scva/parser.hpp"
#include "support.hpp"

using namespace scva;

namespace {

const SpaceSpec d1 = make_space(1, Sector::NS, false);

State parse(const std::string& text, const SpaceSpec& sp = d1) { return parse_state(text, sp); }

std::string report_failure(const Report& r) {
  const Check* c = r.first_failure();
  return c ? c->id + ": " + format_state(c->lhs) + " vs " + format_state(c->rhs) : "";
}

}  // namespace

TEST_CASE("translate") {
  CHECK(translate(d1, State::vacuum()).is_zero());
  CHECK(translate(d1, parse("a1_{-1} |0>")) == parse("a1_{-2} |0>"));
  CHECK(translate(d1, parse("1/2 a1_{-1} a1_{-1} |0>")) == parse("a1_{-2} a1_{-1} |0>"));
  CHECK(translate(d1, parse("a1_{-2} |0>")) == parse("2 a1_{-3} |0>"));
  CHECK(translate(d1, parse("phi1_{-1/2} |0>")) == parse("phi1_{-3/2} |0>"));
  CHECK(translate(d1, parse("phi1_{-3/2} |0>")) == parse("2 phi1_{-5/2} |0>"));
  // divided powers
  const State a = parse("a1_{-1} |0>");
  CHECK(translate_divided(d1, a, 2) == frac(1, 2) * translate(d1, translate(d1, a)));
  // R sector: phi_0 -> phi_{-1}
  const SpaceSpec r2 = make_space(2, Sector::R, true);
  CHECK(translate(r2, parse("phi1_{0} |0>", r2)) == parse("phi1_{-1} |0>", r2));
}

TEST_CASE("nth_product examples") {
  const State a = parse("a1_{-1} |0>");
  CHECK(nth_product(d1, a, a, 1) == State::vacuum());
  CHECK(nth_product(d1, a, a, 0).is_zero());
  CHECK(nth_product(d1, a, State::vacuum(), -1) == a);
  CHECK(nth_product(d1, a, State::vacuum(), -2) == translate(d1, a));
  const State nu = conformal_boson(d1).at("nu");
  CHECK(nth_product(d1, nu, nu, 3) == frac(1, 2) * State::vacuum());
  CHECK(nth_product(d1, nu, nu, 2).is_zero());
  CHECK(nth_product(d1, nu, nu, 1) == 2 * nu);
  CHECK(nth_product(d1, nu, nu, 0) == translate(d1, nu));
}

TEST_CASE("normally_ordered") {
  const SpaceSpec r4 = make_space(4, Sector::R, true);
  const State p1 = parse("psi1_{-1} |0>", r4);
  const State p2 = parse("psi2_{-1} |0>", r4);
  CHECK(normally_ordered(r4, p1, p2) == parse("psi1_{-1} psi2_{-1} |0>", r4));
  CHECK(normally_ordered(r4, p2, p1) == parse("-1 psi1_{-1} psi2_{-1} |0>", r4));
  CHECK(normally_ordered(r4, p1, p1).is_zero());
  CHECK(normally_ordered(r4, State::vacuum(), p1) == p1);
  // :a a: = a_{-1} a_{-1}|0>
  const State a = parse("a1_{-1} |0>");
  CHECK(normally_ordered(d1, a, a) == parse("a1_{-1} a1_{-1} |0>"));
}

TEST_CASE("ope_singular examples") {
  const State nu = conformal_boson(d1).at("nu");
  const auto ope = ope_singular(d1, nu, nu);
  REQUIRE(ope.size() == 3);
  CHECK(ope[0].order == 4);
  CHECK(ope[0].coefficient == frac(1, 2) * State::vacuum());
  CHECK(ope[1].order == 2);
  CHECK(ope[1].coefficient == 2 * nu);
  CHECK(ope[2].order == 1);
  CHECK(ope[2].coefficient == translate(d1, nu));
  CHECK(pole_of(ope, 3).is_zero());

  const SpaceSpec d7 = make_space(7, Sector::NS, false);
  const State phi = g2_states(d7).phi;
  CHECK(pole_of(ope_singular(d7, phi, phi), 3) == -7 * State::vacuum());

  const SpaceSpec p2 = make_space(2, Sector::NS, true);
  const State j = n2_structure(p2).at("j");
  const auto jj = ope_singular(p2, j, j);
  REQUIRE(jj.size() == 1);
  CHECK(jj[0].order == 2);
  CHECK(jj[0].coefficient == State::vacuum());

  CHECK(ope_singular(d1, State::vacuum(), nu).empty());
  CHECK(ope_singular(d1, nu, State::vacuum()).empty());
}

TEST_CASE("skew symmetry") {
  const State a = parse("a1_{-1} |0>");
  CHECK(skew_symmetry_check(d1, a, a, 3).passed());
  CHECK(skew_symmetry_check(d1, State::vacuum(), parse("phi1_{-3/2} a1_{-1} |0>"), 3).passed());
  const State f = parse("phi1_{-1/2} |0>");
  CHECK(skew_symmetry_check(d1, f, f, 3).passed());
  // negative control: flipping the odd-odd sign breaks n = 0
  const Report bad = skew_symmetry_check(d1, f, f, 0, {.flip_fermion_sign = true});
  REQUIRE_FALSE(bad.passed());
  CHECK(bad.first_failure()->id == "skew.n=0");
}

TEST_CASE("commutator formula") {
  const State nu = conformal_boson(d1).at("nu");
  // [L_2, L_-2]|0> = (c/2)|0> with L_n = nu_(n+1)
  CHECK(bracket_on(d1, nu, 3, nu, -1, State::vacuum()) == frac(1, 2) * State::vacuum());
  CHECK(commutator_check(d1, nu, nu, 3, -1, State::vacuum()).passed());
  const State a = parse("a1_{-1} |0>");
  CHECK(bracket_on(d1, a, 0, a, 0, parse("a1_{-2} a1_{-1} |0>")).is_zero());
  // [G_r, G_s] = 2 L_{r+s} on probes, N=1, dim 1: G_r = tau_(r+1/2)
  const SpaceSpec sp = d1;
  const auto n1 = n1_structure(sp);
  const State& tau = n1.at("tau");
  for (const State& probe : probe_basis(sp, 4, 8)) {
    CHECK(commutator_check(sp, tau, tau, 0, 1, probe).passed());
    // r = s = -1/2 at field indices 0, 0: [G_{-1/2}, G_{-1/2}] = 2 L_{-1} = 2T
    CHECK(bracket_on(sp, tau, 0, tau, 0, probe) == 2 * nth_product(sp, n1.at("nu"), probe, 0));
    CHECK(bracket_on(sp, tau, 1, tau, 0, probe) == 2 * nth_product(sp, n1.at("nu"), probe, 1));
  }
}

TEST_CASE("randomized axiom suite, >= 100 instances per space") {
  const SpaceSpec spaces[] = {make_space(1, Sector::NS, false), make_space(2, Sector::NS, false),
                              make_space(3, Sector::NS, false), make_space(2, Sector::NS, true),
                              make_space(2, Sector::R, true)};
  unsigned seed = 1;
  for (const SpaceSpec& sp : spaces) {
    CAPTURE(describe(sp));
    const Report r = testing::axiom_suite(sp, 100, seed++);
    CHECK_MESSAGE(r.passed(), report_failure(r));
    CHECK(r.checks().size() >= 500);
  }
}

TEST_CASE("grading compatibility of products") {
  const SpaceSpec sp = make_space(2, Sector::NS, true);
  const auto n2 = n2_structure(sp);
  for (const auto& [na, a] : n2.vectors)
    for (const auto& [nb, b] : n2.vectors) {
      const Monomial& ma = a.begin()->first;
      const Monomial& mb = b.begin()->first;
      for (long n = -1; n <= max_product_index(a, b); ++n) {
        const State p = nth_product(sp, a, b, n);
        const int w2 = weight2(sp, ma) + weight2(sp, mb) - 2 * static_cast<int>(n) - 2;
        CHECK(project(sp, p, w2, charge(ma) + charge(mb)) == p);
      }
    }
}

TEST_CASE("distinguished vectors are fixed by signed permutations and rotations") {
  for (int dim : {2, 3}) {
    const SpaceSpec sp = make_space(dim, Sector::NS, false);
    const State nu_b = conformal_boson(sp).at("nu");
    const State nu_f = conformal_fermion(sp).at("nu");
    const State tau = n1_structure(sp).at("tau");
    Matrix rot(dim, std::vector<Rational>(dim));
    for (int i = 0; i < dim; ++i) rot[i][i] = 1;
    rot[0][0] = frac(3, 5);
    rot[0][1] = frac(-4, 5);
    rot[1][0] = frac(4, 5);
    rot[1][1] = frac(3, 5);
    Matrix signed_perm(dim, std::vector<Rational>(dim));
    for (int i = 0; i < dim; ++i) signed_perm[(i + 1) % dim][i] = i % 2 == 0 ? -1 : 1;
    for (const Matrix& m : {rot, signed_perm}) {
      const std::map<Letter, Matrix> both{{Letter::A, m}, {Letter::Phi, m}};
      CHECK(transform(sp, nu_b, both) == nu_b);
      CHECK(transform(sp, nu_f, both) == nu_f);
      CHECK(transform(sp, tau, both) == tau);
    }
    // a non-orthogonal change is detected
    Matrix shear = rot;
    shear[0][1] = 1;
    CHECK_FALSE(transform(sp, nu_b, {{Letter::A, shear}}) == nu_b);
  }
}
