#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "scva/holonomy.hpp"
#include "scva/parser.hpp"

using namespace scva;

namespace {

std::string failure(const Report& r) {
  const Check* c = r.first_failure();
  return c ? c->id + ": " + format_state(c->lhs) + " vs " + format_state(c->rhs) : "";
}

std::vector<std::string> failed_ids(const Report& r) {
  std::vector<std::string> out;
  for (const Check& c : r.checks())
    if (c.failed()) out.push_back(c.id);
  return out;
}

GradedComponent only_component(const SpaceSpec& sp, const State& s) {
  const auto g = grading(sp, s);
  REQUIRE(g.size() == 1);
  return g.front();
}

}  // namespace

TEST_CASE("wedge") {
  const SpaceSpec d3 = make_space(3, Sector::NS, false);
  const State e1 = parse_state("phi1_{-1/2} |0>", d3);
  const State e2 = parse_state("phi2_{-1/2} |0>", d3);
  CHECK(wedge(d3, e1, e2) == parse_state("phi1_{-1/2} phi2_{-1/2} |0>", d3));
  CHECK(wedge(d3, e2, e1) == -1 * wedge(d3, e1, e2));
  CHECK(wedge(d3, e1, e1).is_zero());
  CHECK(wedge(d3, State::vacuum(), e1) == e1);
}

TEST_CASE("G2") {
  const SpaceSpec d7 = make_space(7, Sector::NS, false);
  const G2States g = g2_states(d7);
  CHECK(g2_form_printed().size() == 7);
  CHECK(nth_product(d7, g.phi, g.phi, 2) == -7 * State::vacuum());
  CHECK(nth_product(d7, g.phi, g.phi, 1).is_zero());
  CHECK(g.x == frac(1, 6) * nth_product(d7, g.phi, g.phi, 0));

  CHECK(only_component(d7, g.phi).weight == frac(3, 2));
  CHECK(only_component(d7, g.x).weight == 2);
  CHECK(only_component(d7, g.k).weight == 2);
  CHECK(only_component(d7, g.m).weight == frac(5, 2));
  const State nu = n1_structure(d7).at("nu");
  CHECK(nth_product(d7, nu, g.phi, 1) == frac(3, 2) * g.phi);

  // the printed X is reached by the corrected form only
  const State x_printed = g2_x_printed(d7);
  CHECK_FALSE(g.x == x_printed);
  const G2States c = g2_states(d7, g2_form_corrected());
  CHECK(c.x == x_printed);
  CHECK(nth_product(d7, c.phi, c.phi, 2) == -7 * State::vacuum());

  CHECK(three_form_stabilizer(g2_form_corrected()).size() == 1344);
  CHECK(three_form_stabilizer(g2_form_printed()).size() == 8);

  const Report r = g2_check(d7);
  CHECK_MESSAGE(r.passed(), failure(r));
  REQUIRE(r.find("PhiPhi.pole3") != nullptr);
  CHECK(r.find("PhiPhi.pole3")->source == "paper");
  REQUIRE(r.find("X.printed") != nullptr);
  CHECK(r.find("X.printed")->kind == Check::Kind::Informational);
  CHECK_FALSE(r.find("X.printed")->equal);
  CHECK(r.find("X'.printed")->equal);

  CHECK_THROWS_AS(g2_check(make_space(6, Sector::NS, false)), StructureError);
}

TEST_CASE("QK states") {
  for (int n : {1, 2}) {
    CAPTURE(n);
    const SpaceSpec sp = make_space(4 * n, Sector::NS, false);
    const QKStates q = qk_states(sp);
    CHECK(q.n == n);
    CHECK(only_component(sp, q.big_omega).weight == 2);
    CHECK(only_component(sp, q.omega_hat).weight == frac(5, 2));
    CHECK(nth_product(sp, q.big_omega, q.big_omega, 3) == (3 * n * (2 * n + 1)) * State::vacuum());
    const State nu = n1_structure(sp).at("nu");
    CHECK(nth_product(sp, nu, q.omega_hat, 1) == frac(5, 2) * q.omega_hat);
    const State tau = n1_structure(sp).at("tau");
    CHECK(nth_product(sp, tau, q.big_omega, 0) == q.omega_hat);
    CHECK(nth_product(sp, tau, q.omega_hat, 1) == 4 * q.big_omega);
  }
  // n = 1: Lambda^4 is one line, Omega = 3 vol
  const SpaceSpec d4 = make_space(4, Sector::NS, false);
  CHECK(qk_states(d4).big_omega == parse_state("3 phi1_{-1/2} phi2_{-1/2} phi3_{-1/2} phi4_{-1/2} |0>", d4));
  CHECK_THROWS_AS(qk_states(make_space(6, Sector::NS, false)), StructureError);
}

TEST_CASE("QK report") {
  const SpaceSpec d8 = make_space(8, Sector::NS, false);
  const Report r2 = qk_check(d8);
  CHECK_MESSAGE(r2.passed(), failure(r2));
  CHECK(r2.find("OmegaOmega.pole2")->source == "paper");

  // n = 1: the printed -4 Omega + 9 nu_F cannot hold (only nu_F-type terms appear)
  const SpaceSpec d4 = make_space(4, Sector::NS, false);
  const Report r1 = qk_check(d4);
  CHECK(failed_ids(r1) == std::vector<std::string>{"OmegaOmega.pole2", "OmegaOmega.pole1"});
  const QKStates q = qk_states(d4);
  const State nu_f = conformal_fermion(d4).at("nu");
  CHECK(nth_product(d4, q.big_omega, q.big_omega, 1) == 18 * nu_f);
  CHECK_FALSE(nth_product(d4, q.big_omega, q.big_omega, 1) == -4 * q.big_omega + 9 * nu_f);
  // fitted general line -4(n-1) Omega + 6(2n+1) nu_F
  for (const char* id : {"OmegaOmega.general.pole2", "OmegaOmega.general.pole1"}) {
    CAPTURE(id);
    REQUIRE(r1.find(id) != nullptr);
    CHECK(r1.find(id)->equal);
    CHECK(r2.find(id)->equal);
  }
}

TEST_CASE("CY states") {
  const SpaceSpec p4 = make_space(4, Sector::NS, true);
  const CYStates c = cy_states(p4);
  CHECK(c.n == 2);
  CHECK(c.x_plus == parse_state("psi1_{-1/2} psi2_{-1/2} |0>", p4));
  CHECK(only_component(p4, c.x_plus).charge == 2);
  CHECK(only_component(p4, c.x_minus).charge == -2);
  CHECK(only_component(p4, c.y_plus).weight == frac(3, 2));
  CHECK(only_component(p4, c.y_plus).charge == 1);

  const StructureSpec s = n2_structure(p4);
  CHECK(nth_product(p4, c.x_plus, c.x_minus, 1) == -1 * State::vacuum());
  CHECK(nth_product(p4, c.x_plus, c.x_minus, 0) == -1 * s.at("j"));
  CHECK(nth_product(p4, c.y_plus, c.y_minus, 2) == 2 * State::vacuum());
  // G-(z) X+(w) ~ Y+/(z-w)
  CHECK(nth_product(p4, s.at("tau-"), c.x_plus, 0) == c.y_plus);
  for (int k = 0; k <= 3; ++k) {
    CHECK(nth_product(p4, s.at("tau+"), c.x_plus, k).is_zero());
    CHECK(nth_product(p4, c.x_plus, c.x_plus, k).is_zero());
    CHECK(nth_product(p4, c.y_minus, c.y_minus, k).is_zero());
  }

  const SpaceSpec p6 = make_space(6, Sector::NS, true);
  const CYStates c3 = cy_states(p6);
  CHECK(only_component(p6, c3.x_plus).weight == frac(3, 2));
  CHECK(only_component(p6, c3.x_plus).charge == 3);
  CHECK(nth_product(p6, c3.x_plus, c3.x_minus, 2) == -1 * State::vacuum());
  CHECK_THROWS_AS(cy_states(make_space(4, Sector::NS, false)), StructureError);
}

TEST_CASE("CY reports, n = 1..4, NS and R") {
  for (int n = 1; n <= 4; ++n)
    for (Sector sector : {Sector::NS, Sector::R}) {
      CAPTURE(n);
      CAPTURE(static_cast<int>(sector));
      const Report r = cy_check(make_space(2 * n, sector, true));
      CHECK_MESSAGE(r.passed(), failure(r));
      CHECK(r.checks().size() > 40);
      if (n == 2) CHECK(r.find("n2.Y+Y-.pole3") != nullptr);
      if (n == 3) {
        REQUIRE(r.find("n3.X+X-.printed.pole1") != nullptr);
        CHECK_FALSE(r.find("n3.X+X-.printed.pole1")->equal);
        CHECK(r.find("n3.X+X-.pole1")->source == "corrected");
      }
    }
}
