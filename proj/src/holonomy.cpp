#include "scva/holonomy.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "scva/vertex.hpp"

namespace scva {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw StructureError(msg);
}

PoleTable primary(const SpaceSpec& sp, const State& a, const Rational& h) {
  return {{2, h * a}, {1, translate(sp, a)}};
}

State fermions(const SpaceSpec& sp, Letter l, std::initializer_list<int> gens, const Rational& c = 1) {
  std::vector<Mode> modes;
  for (int g : gens) modes.push_back(creation_mode(sp, l, g));
  return make_state(sp, modes, c);
}

// Homogeneity of a state under L0 (and J0 in a polarized space).
void expect_graded(Report& rep, const SpaceSpec& sp, const std::string& name, const State& s, int weight2,
                   int charge = 0) {
  rep.expect("grade." + name, project(sp, s, weight2, charge), s, "paper");
}

}  // namespace

State wedge(const SpaceSpec& space, const State& a, const State& b) {
  State out;
  for (const auto& [m, c] : a) out += c * apply_modes(space, m, b);
  return out;
}

ThreeForm g2_form_printed() {
  return {{{1, 2, 5}, 1},  {{1, 3, 6}, 1},  {{1, 4, 7}, 1}, {{2, 3, 7}, -1},
          {{2, 4, 6}, 1},  {{3, 4, 5}, -1}, {{3, 6, 7}, 1}};
}

ThreeForm g2_form_corrected() {
  auto f = g2_form_printed();
  f.back() = {{5, 6, 7}, 1};
  return f;
}

State three_form_state(const SpaceSpec& space7, const ThreeForm& f) {
  require(!space7.polarized && space7.sector == Sector::NS && space7.dim == 7, "G2 needs the orthonormal NS space of dim 7");
  State s;
  for (const auto& [t, sign] : f) s += fermions(space7, Letter::Phi, {t[0], t[1], t[2]}, sign);
  return s;
}

G2States g2_states(const SpaceSpec& space7, const ThreeForm& form) {
  G2States g;
  g.phi = three_form_state(space7, form);
  g.x = frac(1, 6) * nth_product(space7, g.phi, g.phi, 0);
  const State tau = n1_structure(space7).at("tau");
  g.k = nth_product(space7, tau, g.phi, 0);
  g.m = nth_product(space7, tau, g.x, 0);
  return g;
}

State g2_x_printed(const SpaceSpec& sp) {
  State x = fermions(sp, Letter::Phi, {1, 2, 3, 4}, -1) + fermions(sp, Letter::Phi, {1, 2, 6, 7}) -
            fermions(sp, Letter::Phi, {1, 3, 5, 7}) + fermions(sp, Letter::Phi, {1, 4, 5, 6}) -
            fermions(sp, Letter::Phi, {2, 3, 5, 6}) - fermions(sp, Letter::Phi, {2, 4, 5, 7}) -
            fermions(sp, Letter::Phi, {3, 4, 6, 7});
  for (int i = 1; i <= 7; ++i) {
    const std::vector<Mode> pair{creation_mode(sp, Letter::Phi, i, 1), creation_mode(sp, Letter::Phi, i, 0)};
    x += make_state(sp, pair, frac(-1, 2));
  }
  return x;
}

std::vector<SignedPermutation> three_form_stabilizer(const ThreeForm& f) {
  using Key = std::array<int, 3>;
  const auto normalize = [](const ThreeForm& in) {
    std::map<Key, int> out;
    for (auto [t, s] : in) {
      // bubble sort with parity
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b + 1 < 3 - a; ++b)
          if (t[b] > t[b + 1]) {
            std::swap(t[b], t[b + 1]);
            s = -s;
          }
      out[t] += s;
    }
    return out;
  };
  const auto target = normalize(f);
  std::vector<SignedPermutation> out;
  std::array<int, 7> p;
  std::iota(p.begin(), p.end(), 0);
  do {
    for (int mask = 0; mask < 128; ++mask) {
      std::array<int, 7> sign;
      for (int i = 0; i < 7; ++i) sign[i] = (mask >> i) & 1 ? -1 : 1;
      ThreeForm img;
      for (const auto& [t, s] : f)
        img.push_back({{p[t[0] - 1] + 1, p[t[1] - 1] + 1, p[t[2] - 1] + 1},
                       s * sign[t[0] - 1] * sign[t[1] - 1] * sign[t[2] - 1]});
      if (normalize(img) == target) out.push_back({p, sign});
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

State act(const SpaceSpec& sp, const SignedPermutation& g, const State& s) {
  Matrix m(7, std::vector<Rational>(7));
  for (int i = 0; i < 7; ++i) m[g.perm[i]][i] = g.sign[i];
  return transform(sp, s, {{Letter::Phi, m}});
}

}  // namespace

Report g2_check(const SpaceSpec& sp) {
  Report rep("G2, dim 7");
  const G2States g = g2_states(sp);
  const auto n1 = n1_structure(sp);
  const State& nu = n1.at("nu");
  const State vac = State::vacuum();

  expect_ope(rep, sp, "PhiPhi", g.phi, g.phi, {{3, -7 * vac}, {1, 6 * g.x}});
  expect_ope(rep, sp, "LPhi", nu, g.phi, primary(sp, g.phi, frac(3, 2)), "derived");
  expect_graded(rep, sp, "Phi", g.phi, 3);
  expect_graded(rep, sp, "X", g.x, 4);
  expect_graded(rep, sp, "K", g.k, 4);
  expect_graded(rep, sp, "M", g.m, 5);

  // The printed X is *Phi' - (1/2) sum phi_{-3/2} phi_{-1/2} for the form
  // Phi' with e5^e6^e7; the printed Phi has e3^e6^e7 instead.
  const State printed_x = g2_x_printed(sp);
  rep.inform("X.printed", g.x, printed_x, "paper", std::nullopt,
             "X from the printed Phi vs the printed X display (last term summed over i)");
  const G2States gc = g2_states(sp, g2_form_corrected());
  expect_ope(rep, sp, "Phi'Phi'", gc.phi, gc.phi, {{3, -7 * vac}, {1, 6 * gc.x}}, "derived");
  rep.expect("X'.printed", gc.x, printed_x, "derived").note =
      "Phi' = printed Phi with e3^e6^e7 -> e5^e6^e7 reproduces the printed X";

  const auto stab = three_form_stabilizer(g2_form_printed());
  const auto stab_c = three_form_stabilizer(g2_form_corrected());
  // 1344 = 2^3 * |GL(3, F2)|, the signed permutations inside G2.
  rep.expect_true("symmetry.order", stab_c.size() == 1344, "derived",
                  "signed permutations fixing Phi: " + std::to_string(stab.size()) + ", fixing Phi': " +
                      std::to_string(stab_c.size()));
  // State-level invariance under a spread of stabilizer elements.
  for (std::size_t i = 0; i < stab_c.size(); i += std::max<std::size_t>(1, stab_c.size() / 6)) {
    const std::string id = "symmetry.Phi'." + std::to_string(i);
    rep.expect(id, act(sp, stab_c[i], gc.phi), gc.phi, "derived");
    rep.expect("symmetry.X'." + std::to_string(i), act(sp, stab_c[i], gc.x), gc.x, "derived");
  }
  for (std::size_t i = 0; i < stab.size(); i += std::max<std::size_t>(1, stab.size() / 3))
    rep.expect("symmetry.Phi." + std::to_string(i), act(sp, stab[i], g.phi), g.phi, "derived");
  return rep;
}

QKStates qk_states(const SpaceSpec& sp) {
  require(!sp.polarized && sp.sector == Sector::NS && sp.dim % 4 == 0,
          "quaternionic-Kaehler states need an orthonormal NS space of dim 4n");
  QKStates q;
  q.n = sp.dim / 4;
  for (int i = 0; i < q.n; ++i) {
    const int a = 4 * i + 1, b = a + 1, c = a + 2, d = a + 3;
    q.omega[0] += fermions(sp, Letter::Phi, {a, b}) + fermions(sp, Letter::Phi, {c, d});
    q.omega[1] += fermions(sp, Letter::Phi, {a, c}) - fermions(sp, Letter::Phi, {b, d});
    q.omega[2] += fermions(sp, Letter::Phi, {a, d}) + fermions(sp, Letter::Phi, {b, c});
  }
  for (const auto& w : q.omega) q.big_omega += frac(1, 2) * wedge(sp, w, w);
  q.omega_hat = nth_product(sp, n1_structure(sp).at("tau"), q.big_omega, 0);
  return q;
}

Report qk_check(const SpaceSpec& sp) {
  const QKStates q = qk_states(sp);
  const int n = q.n;
  Report rep("quaternionic-Kaehler, n=" + std::to_string(n));
  const auto n1 = n1_structure(sp);
  const State& nu = n1.at("nu");
  const State& tau = n1.at("tau");
  const State nu_f = conformal_fermion(sp).at("nu");
  const State& om = q.big_omega;
  const State& oh = q.omega_hat;
  const Rational k = 3 * n * (2 * n + 1);

  expect_graded(rep, sp, "Omega", om, 4);
  expect_graded(rep, sp, "OmegaHat", oh, 5);
  bool shape = true;
  for (const auto& [m, c] : oh) {
    int bosons = 0;
    int fermions_half = 0;
    for (const auto& x : m) {
      if (x.letter == Letter::A && x.idx2 == -2) ++bosons;
      if (x.letter == Letter::Phi && x.idx2 == -1) ++fermions_half;
    }
    shape = shape && bosons == 1 && fermions_half == 3 && m.size() == 4;
  }
  rep.expect_true("shape.OmegaHat", shape, "paper", "every term is a_{-1} times three phi_{-1/2}");

  expect_ope(rep, sp, "LOmega", nu, om, primary(sp, om, 2));
  const State p2 = -4 * om + k * nu_f;
  expect_ope(rep, sp, "OmegaOmega", om, om, {{4, k * State::vacuum()}, {2, p2}, {1, frac(1, 2) * translate(sp, p2)}});
  const State g2 = Rational(-4 * (n - 1)) * om + Rational(6 * (2 * n + 1)) * nu_f;
  inform_ope(rep, sp, "OmegaOmega.general", om, om,
             {{4, k * State::vacuum()}, {2, g2}, {1, frac(1, 2) * translate(sp, g2)}}, "derived",
             "-4(n-1) Omega + 6(2n+1) nu_F, fitted for n = 1..4; equals the printed line only at n = 2");
  expect_ope(rep, sp, "GOmega", tau, om, {{1, oh}});
  expect_ope(rep, sp, "LOmegaHat", nu, oh, primary(sp, oh, frac(5, 2)));
  expect_ope(rep, sp, "GOmegaHat", tau, oh, {{2, 4 * om}, {1, translate(sp, om)}});
  return rep;
}

CYStates cy_states(const SpaceSpec& sp) {
  require(sp.polarized && !sp.quaternionic, "Calabi-Yau currents need a polarized space");
  CYStates s;
  s.n = sp.rank();
  std::vector<Mode> psi, phi;
  for (int i = 1; i <= s.n; ++i) {
    psi.push_back(creation_mode(sp, Letter::Psi, i));
    phi.push_back(creation_mode(sp, Letter::Phi, i));
  }
  s.x_plus = make_state(sp, psi);
  s.x_minus = make_state(sp, phi);
  for (int j = 1; j <= s.n; ++j) {
    std::vector<Mode> yp{creation_mode(sp, Letter::C, j)};
    std::vector<Mode> ym{creation_mode(sp, Letter::B, j)};
    for (int i = 1; i <= s.n; ++i) {
      if (i == j) continue;
      yp.push_back(psi[i - 1]);
      ym.push_back(phi[i - 1]);
    }
    const Rational sign = j % 2 == 1 ? 1 : -1;
    s.y_plus += make_state(sp, yp, sign);
    s.y_minus += make_state(sp, ym, sign);
  }
  return s;
}

Report cy_check(const SpaceSpec& sp) {
  const CYStates s = cy_states(sp);
  const int n = s.n;
  Report rep("Calabi-Yau, n=" + std::to_string(n) + (sp.sector == Sector::NS ? " NS" : " R"));
  const auto n2 = n2_structure(sp);
  const State& L = n2.at("nu");
  const State& J = n2.at("j");
  const State& gp = n2.at("tau+");
  const State& gm = n2.at("tau-");
  const State vac = State::vacuum();
  const auto T = [&](const State& x) { return translate(sp, x); };
  const State &xp = s.x_plus, &xm = s.x_minus, &yp = s.y_plus, &ym = s.y_minus;

  expect_graded(rep, sp, "X+", xp, n, n);
  expect_graded(rep, sp, "X-", xm, n, -n);
  expect_graded(rep, sp, "Y+", yp, n + 1, n - 1);
  expect_graded(rep, sp, "Y-", ym, n + 1, 1 - n);

  // L and J lines: the display lists the leading pole; the first-order pole
  // of L is the translate.
  expect_ope(rep, sp, "LX+", L, xp, primary(sp, xp, frac(n, 2)));
  expect_ope(rep, sp, "LX-", L, xm, primary(sp, xm, frac(n, 2)));
  expect_ope(rep, sp, "JX+", J, xp, {{1, Rational(n) * xp}});
  expect_ope(rep, sp, "JX-", J, xm, {{1, Rational(-n) * xm}});
  expect_ope(rep, sp, "LY+", L, yp, primary(sp, yp, frac(n + 1, 2)));
  expect_ope(rep, sp, "LY-", L, ym, primary(sp, ym, frac(n + 1, 2)));
  expect_ope(rep, sp, "JY+", J, yp, {{1, Rational(n - 1) * yp}});
  expect_ope(rep, sp, "JY-", J, ym, {{1, Rational(1 - n) * ym}});

  expect_ope(rep, sp, "G+X+", gp, xp, {});
  expect_ope(rep, sp, "G-X+", gm, xp, {{1, yp}});
  expect_ope(rep, sp, "G+Y+", gp, yp, {{2, Rational(n) * xp}, {1, T(xp)}});
  expect_ope(rep, sp, "G-Y+", gm, yp, {});
  expect_ope(rep, sp, "G+Y-", gp, ym, {});

  // Lines printed with typos: the literal reading is recorded as a diff, the
  // evident reading is checked.
  inform_ope(rep, sp, "G+X-.printed", gp, xm, {}, "paper", "printed without a pole: G+(z)X-(w) ~ Y-(w)");
  expect_ope(rep, sp, "G+X-", gp, xm, {{1, ym}}, "corrected");
  inform_ope(rep, sp, "G-X+.second.printed", gm, xp, {}, "paper",
             "second line labelled G-(z)X+(w) ~ 0 contradicts the first");
  expect_ope(rep, sp, "G-X-", gm, xm, {}, "corrected");
  inform_ope(rep, sp, "G-Y+.second.printed", gm, yp, {{2, Rational(n) * xp}, {1, T(xm)}}, "paper",
             "second line labelled G-(z)Y+(w), with X+ at the double pole and dX- at the simple pole");
  expect_ope(rep, sp, "G-Y-", gm, ym, {{2, Rational(n) * xm}, {1, T(xm)}}, "corrected");

  const std::vector<std::pair<std::string, const State*>> plus{{"X+", &xp}, {"Y+", &yp}};
  const std::vector<std::pair<std::string, const State*>> minus{{"X-", &xm}, {"Y-", &ym}};
  for (const auto* side : {&plus, &minus})
    for (const auto& [na, a] : *side)
      for (const auto& [nb, b] : *side) expect_ope(rep, sp, na + nb, *a, *b, {});

  const State jj = normally_ordered(sp, J, J);
  if (n == 2) {
    expect_ope(rep, sp, "n2.X+X-", xp, xm, {{2, -1 * vac}, {1, -1 * J}});
    expect_ope(rep, sp, "n2.X+Y-", xp, ym, {{1, gp}});
    expect_ope(rep, sp, "n2.X-Y+", xm, yp, {{1, gm}});
    expect_ope(rep, sp, "n2.Y+Y-", yp, ym, {{3, 2 * vac}, {2, J}, {1, L + frac(1, 2) * T(J)}});
  }
  if (n == 3) {
    inform_ope(rep, sp, "n3.X+X-.printed", xp, xm, {{3, -1 * vac}, {2, -1 * J}, {1, frac(-1, 2) * (jj - T(J))}},
               "paper", "printed simple pole -(:JJ: - dJ)/2");
    expect_ope(rep, sp, "n3.X+X-", xp, xm, {{3, -1 * vac}, {2, -1 * J}, {1, frac(-1, 2) * (jj + T(J))}},
               "corrected");
    expect_ope(rep, sp, "n3.X+Y-", xp, ym, {{2, -1 * gp}, {1, -1 * normally_ordered(sp, J, gp)}});
    expect_ope(rep, sp, "n3.X-Y+", xm, yp, {{2, -1 * gm}, {1, normally_ordered(sp, J, gm)}});
    inform_ope(rep, sp, "n3.Y+Y-.printed", yp, ym,
               {{4, -3 * vac}, {3, -2 * J}, {2, -1 * (frac(1, 2) * jj + L - T(J))}}, "paper",
               "printed double pole -(:JJ:/2 + L - dJ); the simple pole is not displayed");
    const State simple = frac(-1, 4) * T(jj) - frac(1, 2) * T(T(J)) - T(L) - normally_ordered(sp, J, L) +
                         normally_ordered(sp, gp, gm);
    expect_ope(rep, sp, "n3.Y+Y-", yp, ym, {{4, -3 * vac}, {3, -2 * J}, {2, -1 * (frac(1, 2) * jj + L + T(J))}, {1, simple}},
               "corrected");
  }
  return rep;
}

}  // namespace scva
