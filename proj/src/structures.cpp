#include "scva/structures.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace scva {

std::string kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::Virasoro: return "virasoro";
    case StructureKind::N1: return "n1";
    case StructureKind::N2: return "n2";
    case StructureKind::N4: return "n4";
    case StructureKind::Topological: return "topological";
  }
  return "?";
}

std::string twist_name(Twist t) { return t == Twist::A ? "A" : "B"; }

const State& StructureSpec::at(const std::string& name) const {
  auto it = vectors.find(name);
  if (it == vectors.end()) throw StructureError(kind_name(kind) + " structure has no vector '" + name + "'");
  return it->second;
}

namespace {

// Lowest (level 0) or next (level 1) creation state products, e.g.
// gen(B, i) gen(Psi, i) = b^i_{-1} psi^i_{-1/2} |0> in NS.
struct Builder {
  const SpaceSpec& space;

  Mode mode(Letter l, int i, int level = 0) const { return creation_mode(space, l, i, level); }
  State product(std::initializer_list<Mode> ms, const Rational& c = 1) const {
    return make_state(space, std::vector<Mode>(ms), c);
  }
};

void require(bool ok, const std::string& what) {
  if (!ok) throw StructureError(what);
}

State boson_conformal(const SpaceSpec& space) {
  const Builder b{space};
  State nu;
  for (int i = 1; i <= space.rank(); ++i) {
    if (space.polarized) {
      nu += b.product({b.mode(Letter::B, i), b.mode(Letter::C, i)});
    } else {
      nu += b.product({b.mode(Letter::A, i), b.mode(Letter::A, i)}, frac(1, 2));
    }
  }
  return nu;
}

State fermion_lambda(const SpaceSpec& space, const Rational& lambda) {
  const Builder b{space};
  State nu;
  for (int i = 1; i <= space.rank(); ++i) {
    nu += b.product({b.mode(Letter::Phi, i, 1), b.mode(Letter::Psi, i)}, 1 - lambda);
    nu += b.product({b.mode(Letter::Psi, i, 1), b.mode(Letter::Phi, i)}, lambda);
  }
  return nu;
}

void n2_vectors(const SpaceSpec& space, std::map<std::string, State>& v) {
  const Builder b{space};
  State tp, tm, j;
  for (int i = 1; i <= space.rank(); ++i) {
    tp += b.product({b.mode(Letter::B, i), b.mode(Letter::Psi, i)});
    tm += b.product({b.mode(Letter::C, i), b.mode(Letter::Phi, i)});
    j += b.product({b.mode(Letter::Psi, i), b.mode(Letter::Phi, i)});
  }
  v["nu"] = boson_conformal(space) + fermion_lambda(space, frac(1, 2));
  v["tau+"] = tp;
  v["tau-"] = tm;
  v["j"] = j;
}

struct Expected {
  int weight2;
  int charge;
};

Expected expected_grade(const std::string& name, const StructureSpec& s) {
  static const std::map<std::string, Expected> table = {
      {"nu", {4, 0}},  {"tau", {3, 0}},         {"tau+", {3, 1}},        {"tau-", {3, -1}},
      {"j", {2, 0}},   {"tilde_tau+", {3, 1}},  {"tilde_tau-", {3, -1}}, {"j++", {2, 2}},
      {"j--", {2, -2}}, {"T", {4, 0}},          {"J", {2, 0}},           {"Q", {2, 1}},
      {"G", {4, -1}},
  };
  Expected e = table.at(name);
  if (s.twist == Twist::B) e.charge = -e.charge;
  if (!s.space.polarized) e.charge = 0;
  return e;
}

void check_homogeneous(Report& rep, const StructureSpec& s, std::initializer_list<const char*> names) {
  const Grading g = s.kind != StructureKind::Topological ? Grading::Untwisted
                    : s.twist == Twist::B                ? Grading::B
                                                         : Grading::A;
  for (const char* name : names) {
    const State& v = s.at(name);
    const Expected e = expected_grade(name, s);
    // tau of an N=1 structure built from N=2 mixes charges +1 and -1.
    State part;
    if (std::string(name) == "tau") {
      for (auto& comp : grading(s.space, v, g))
        if (comp.weight == half(e.weight2)) part += comp.component;
    } else {
      part = project(s.space, v, e.weight2, e.charge, g);
    }
    rep.expect(std::string("grade.") + name, std::move(part), v, "paper");
  }
}

// Primary field of weight h: nu(z)a(w) ~ h a/(z-w)^2 + Ta/(z-w).
PoleTable primary(const SpaceSpec& space, const State& a, const Rational& h) {
  return {{2, h * a}, {1, translate(space, a)}};
}

}  // namespace

State project(const SpaceSpec& space, const State& s, int weight2, int charge, Grading g) {
  for (auto& comp : grading(space, s, g))
    if (comp.weight == half(weight2) && comp.charge == charge) return comp.component;
  return {};
}

StructureSpec conformal_boson(const SpaceSpec& space) {
  return {StructureKind::Virasoro, space, {{"nu", boson_conformal(space)}}, Rational(space.dim), std::nullopt};
}

StructureSpec conformal_fermion(const SpaceSpec& space) {
  require(space.sector == Sector::NS && !space.polarized, "conformal_fermion needs an orthonormal NS space");
  const Builder b{space};
  State nu;
  for (int i = 1; i <= space.rank(); ++i)
    nu += b.product({b.mode(Letter::Phi, i, 1), b.mode(Letter::Phi, i)}, frac(1, 2));
  return {StructureKind::Virasoro, space, {{"nu", nu}}, frac(space.dim, 2), std::nullopt};
}

StructureSpec polarized_fermion_conformal(const SpaceSpec& space, const Rational& lambda) {
  require(space.polarized, "polarized_fermion_conformal needs a polarized space");
  const Rational c = -(6 * lambda * lambda - 6 * lambda + 1) * space.dim;
  return {StructureKind::Virasoro, space, {{"nu", fermion_lambda(space, lambda)}}, c, std::nullopt};
}

StructureSpec n1_structure(const SpaceSpec& space) {
  require(space.sector == Sector::NS && !space.polarized, "n1_structure needs an orthonormal NS space");
  const Builder b{space};
  State tau;
  for (int i = 1; i <= space.rank(); ++i) tau += b.product({b.mode(Letter::A, i), b.mode(Letter::Phi, i)});
  State nu = boson_conformal(space) + conformal_fermion(space).at("nu");
  return {StructureKind::N1, space, {{"nu", nu}, {"tau", tau}}, frac(3 * space.dim, 2), std::nullopt};
}

StructureSpec n2_structure(const SpaceSpec& space) {
  require(space.polarized, "n2_structure needs a polarized space");
  StructureSpec s{StructureKind::N2, space, {}, frac(3 * space.dim, 2), std::nullopt};
  n2_vectors(space, s.vectors);
  return s;
}

StructureSpec n4_structure(const SpaceSpec& space) {
  require(space.quaternionic, "n4_structure needs a quaternionic space");
  StructureSpec s{StructureKind::N4, space, {}, frac(3 * space.dim, 2), std::nullopt};
  n2_vectors(space, s.vectors);
  const Builder b{space};
  State ttp, ttm, jpp, jmm;
  for (int i = 1; 2 * i <= space.rank(); ++i) {
    const int o = 2 * i - 1;
    const int e = 2 * i;
    ttp += b.product({b.mode(Letter::C, o), b.mode(Letter::Psi, e)}) - b.product({b.mode(Letter::C, e), b.mode(Letter::Psi, o)});
    ttm += b.product({b.mode(Letter::B, o), b.mode(Letter::Phi, e)}) - b.product({b.mode(Letter::B, e), b.mode(Letter::Phi, o)});
    jpp += b.product({b.mode(Letter::Psi, e), b.mode(Letter::Psi, o)});
    jmm += b.product({b.mode(Letter::Phi, e), b.mode(Letter::Phi, o)});
  }
  s.vectors["tilde_tau+"] = ttp;
  s.vectors["tilde_tau-"] = ttm;
  s.vectors["j++"] = jpp;
  s.vectors["j--"] = jmm;
  return s;
}

Report verify_virasoro(const StructureSpec& s) {
  Report rep("virasoro c=" + to_string(s.claimed_c));
  const State& nu = s.at("nu");
  check_homogeneous(rep, s, {"nu"});
  PoleTable t = primary(s.space, nu, 2);
  t[4] = (s.claimed_c / 2) * State::vacuum();
  expect_ope(rep, s.space, "LL", nu, nu, t);
  return rep;
}

Report verify_n1(const StructureSpec& s) {
  Report rep("n1 c=" + to_string(s.claimed_c));
  rep.merge(verify_virasoro(s));
  const State& nu = s.at("nu");
  const State& tau = s.at("tau");
  check_homogeneous(rep, s, {"tau"});
  expect_ope(rep, s.space, "LG", nu, tau, primary(s.space, tau, frac(3, 2)));
  expect_ope(rep, s.space, "GG", tau, tau, {{3, (2 * s.claimed_c / 3) * State::vacuum()}, {1, 2 * nu}});
  return rep;
}

namespace {

void n2_relations(Report& rep, const StructureSpec& s) {
  const SpaceSpec& sp = s.space;
  const State& nu = s.at("nu");
  const State& tp = s.at("tau+");
  const State& tm = s.at("tau-");
  const State& j = s.at("j");
  const Rational& c = s.claimed_c;
  const State vac = State::vacuum();
  const State tj = translate(sp, j);

  rep.merge(verify_virasoro(s));
  check_homogeneous(rep, s, {"tau+", "tau-", "j"});
  expect_ope(rep, sp, "LG+", nu, tp, primary(sp, tp, frac(3, 2)));
  expect_ope(rep, sp, "LG-", nu, tm, primary(sp, tm, frac(3, 2)));
  expect_ope(rep, sp, "LJ", nu, j, primary(sp, j, 1));
  expect_ope(rep, sp, "JJ", j, j, {{2, (c / 3) * vac}});
  expect_ope(rep, sp, "JG+", j, tp, {{1, tp}});
  expect_ope(rep, sp, "JG-", j, tm, {{1, -tm}});
  expect_ope(rep, sp, "G+G+", tp, tp, {});
  expect_ope(rep, sp, "G-G-", tm, tm, {});
  expect_ope(rep, sp, "G-G+", tm, tp, {{3, (c / 3) * vac}, {2, -j}, {1, nu - frac(1, 2) * tj}}, "normalized");
  expect_ope(rep, sp, "G+G-", tp, tm, {{3, (c / 3) * vac}, {2, j}, {1, nu + frac(1, 2) * tj}}, "normalized");
  inform_ope(rep, sp, "G-G+.printed", tm, tp, {{3, (2 * c / 3) * vac}, {2, -2 * j}, {1, 2 * nu - tj}}, "paper",
             "literal [G-_r, G+_s] = 2L - (r-s)J + (c/3)(r^2-1/4); the vectors give exactly half of each term");
}

}  // namespace

Report verify_n2(const StructureSpec& s) {
  Report rep("n2 c=" + to_string(s.claimed_c));
  n2_relations(rep, s);
  return rep;
}

Report verify_n4(const StructureSpec& s) {
  Report rep("n4 c=" + to_string(s.claimed_c));
  n2_relations(rep, s);
  const SpaceSpec& sp = s.space;
  const State& nu = s.at("nu");
  const State& tp = s.at("tau+");
  const State& tm = s.at("tau-");
  const State& j = s.at("j");
  const State& ttp = s.at("tilde_tau+");
  const State& ttm = s.at("tilde_tau-");
  const State& jpp = s.at("j++");
  const State& jmm = s.at("j--");
  const Rational& c = s.claimed_c;
  const State vac = State::vacuum();

  check_homogeneous(rep, s, {"tilde_tau+", "tilde_tau-", "j++", "j--"});
  expect_ope(rep, sp, "LG~+", nu, ttp, primary(sp, ttp, frac(3, 2)));
  expect_ope(rep, sp, "LG~-", nu, ttm, primary(sp, ttm, frac(3, 2)));
  expect_ope(rep, sp, "JG~+", j, ttp, {{1, ttp}});
  expect_ope(rep, sp, "JG~-", j, ttm, {{1, -ttm}});
  expect_ope(rep, sp, "LJ++", nu, jpp, primary(sp, jpp, 1));
  expect_ope(rep, sp, "LJ--", nu, jmm, primary(sp, jmm, 1));
  expect_ope(rep, sp, "JJ++", j, jpp, {{1, 2 * jpp}});
  expect_ope(rep, sp, "JJ--", j, jmm, {{1, -2 * jmm}});
  expect_ope(rep, sp, "J--J++", jmm, jpp, {{2, (-c / 6) * vac}, {1, j}}, "normalized");
  inform_ope(rep, sp, "J--J++.printed", jmm, jpp, {{2, (-c / 3) * vac}, {1, j}}, "paper",
             "printed central term -c/3; with J(z)J(w) ~ (c/3)/(z-w)^2 and the first-order pole J, "
             "the Jacobi identity forces -c/6");
  expect_ope(rep, sp, "J++J++", jpp, jpp, {});
  expect_ope(rep, sp, "J--J--", jmm, jmm, {});
  expect_ope(rep, sp, "J--G+", jmm, tp, {{1, ttm}});
  expect_ope(rep, sp, "J++G~-", jpp, ttm, {{1, -tp}});
  expect_ope(rep, sp, "J++G-", jpp, tm, {{1, ttp}});
  expect_ope(rep, sp, "J--G~+", jmm, ttp, {{1, -tm}});
  expect_ope(rep, sp, "J--G-", jmm, tm, {});
  expect_ope(rep, sp, "J++G+", jpp, tp, {});
  expect_ope(rep, sp, "J++G~+", jpp, ttp, {});
  expect_ope(rep, sp, "J--G~-", jmm, ttm, {});
  expect_ope(rep, sp, "G+G~-", tp, ttm, {});
  expect_ope(rep, sp, "G-G~+", tm, ttp, {});
  expect_ope(rep, sp, "G~+G~+", ttp, ttp, {}, "derived");
  expect_ope(rep, sp, "G~-G~-", ttm, ttm, {}, "derived");
  const State tj = translate(sp, j);
  expect_ope(rep, sp, "G~+G~-", ttp, ttm, {{3, (c / 3) * vac}, {2, j}, {1, nu + frac(1, 2) * tj}}, "normalized");
  inform_ope(rep, sp, "G~+G~-.printed", ttp, ttm, {{3, (2 * c / 3) * vac}, {2, j}, {1, nu + frac(1, 2) * tj}},
             "paper", "printed central term 2c/3; the J and L + dJ/2 poles force c/3 as in G+G-");
  expect_ope(rep, sp, "G+G~+", tp, ttp, {{2, -2 * jpp}, {1, -translate(sp, jpp)}});
  expect_ope(rep, sp, "G-G~-", tm, ttm, {{2, -2 * jmm}, {1, -translate(sp, jmm)}});
  return rep;
}

Report verify_topological(const StructureSpec& s) {
  Report rep("topological d=" + to_string(s.claimed_c));
  const SpaceSpec& sp = s.space;
  const State& t = s.at("T");
  const State& jt = s.at("J");
  const State& q = s.at("Q");
  const State& g = s.at("G");
  const Rational& d = s.claimed_c;
  const State vac = State::vacuum();

  check_homogeneous(rep, s, {"T", "J", "Q", "G"});
  // Central charge 0 is the pole-4 line of TTT.
  expect_ope(rep, sp, "TTT", t, t, primary(sp, t, 2));
  expect_ope(rep, sp, "TJJ", jt, jt, {{2, d * vac}});
  PoleTable ttj = primary(sp, jt, 1);
  ttj[3] = -d * vac;
  expect_ope(rep, sp, "TTJ", t, jt, ttj);
  expect_ope(rep, sp, "TGG", g, g, {});
  expect_ope(rep, sp, "TTG", t, g, primary(sp, g, 2));
  expect_ope(rep, sp, "TJG", jt, g, {{1, -g}});
  expect_ope(rep, sp, "TQQ", q, q, {});
  expect_ope(rep, sp, "TTQ", t, q, primary(sp, q, 1));
  expect_ope(rep, sp, "TJQ", jt, q, {{1, q}});
  expect_ope(rep, sp, "TQG", q, g, {{3, d * vac}, {2, jt}, {1, t}});
  return rep;
}

Report verify(const StructureSpec& s) {
  switch (s.kind) {
    case StructureKind::Virasoro: return verify_virasoro(s);
    case StructureKind::N1: return verify_n1(s);
    case StructureKind::N2: return verify_n2(s);
    case StructureKind::N4: return verify_n4(s);
    case StructureKind::Topological: return verify_topological(s);
  }
  throw StructureError("unknown structure kind");
}

StructureSpec n1_from_n2(const StructureSpec& s, const Rational& a) {
  if (a == 0) throw StructureError("n1_from_n2 needs a nonzero a");
  StructureSpec out{StructureKind::N1, s.space, {}, s.claimed_c, std::nullopt};
  out.vectors["nu"] = s.at("nu");
  out.vectors["tau"] = a * s.at("tau+") + (1 / a) * s.at("tau-");
  return out;
}

StructureSpec twist(const StructureSpec& s, Twist which) {
  require(s.kind == StructureKind::N2 || s.kind == StructureKind::N4, "twist needs an N=2 structure");
  const State half_tj = frac(1, 2) * translate(s.space, s.at("j"));
  StructureSpec out{StructureKind::Topological, s.space, {}, s.claimed_c / 3, which};
  if (which == Twist::A) {
    out.vectors = {{"T", s.at("nu") + half_tj}, {"J", s.at("j")}, {"Q", s.at("tau+")}, {"G", s.at("tau-")}};
  } else {
    out.vectors = {{"T", s.at("nu") - half_tj}, {"J", -s.at("j")}, {"Q", s.at("tau-")}, {"G", s.at("tau+")}};
  }
  return out;
}

StructureSpec untwist(const StructureSpec& s, Twist which) {
  require(s.kind == StructureKind::Topological, "untwist needs a topological structure");
  const State half_tj = frac(1, 2) * translate(s.space, s.at("J"));
  StructureSpec out{StructureKind::N2, s.space, {}, 3 * s.claimed_c, std::nullopt};
  if (which == Twist::A) {
    out.vectors = {{"nu", s.at("T") - half_tj}, {"j", s.at("J")}, {"tau+", s.at("Q")}, {"tau-", s.at("G")}};
  } else {
    out.vectors = {{"nu", s.at("T") - half_tj}, {"j", -s.at("J")}, {"tau+", s.at("G")}, {"tau-", s.at("Q")}};
  }
  return out;
}

std::vector<State> probe_basis(const SpaceSpec& space, int max_weight2, std::size_t count) {
  const auto monos = enumerate_monomials(space, Grading::Untwisted, max_weight2);
  std::vector<State> out;
  if (monos.empty() || count == 0) return out;
  const std::size_t n = std::min(count, monos.size());
  for (std::size_t i = 0; i < n; ++i) out.push_back(State::of(monos[i * monos.size() / n]));
  return out;
}

namespace {

// Field-mode conventions: L_m = nu_(m+1), G_r = tau_(r+1/2), J_n = j_(n);
// for the topological algebra T_n = T_(n+1), G_n = G_(n+1), Q_n = Q_(n).
struct ModeChecker {
  const StructureSpec& s;
  std::span<const State> probes;
  Report& rep;

  State act(const State& a, long n, const State& p) const { return nth_product(s.space, a, p, n); }

  void bracket(const std::string& id, const State& a, long m, const State& b, long n,
               const std::function<State(const State&)>& rhs) const {
    for (std::size_t k = 0; k < probes.size(); ++k) {
      rep.expect(id + ".probe" + std::to_string(k), bracket_on(s.space, a, m, b, n, probes[k]), rhs(probes[k]),
                 "paper");
    }
  }
};

}  // namespace

Report spot_check_modes(const StructureSpec& s, std::span<const State> probes) {
  Report rep("mode relations");
  ModeChecker mc{s, probes, rep};
  const Rational& c = s.claimed_c;
  const auto delta = [](long x) { return x == 0 ? 1 : 0; };

  if (s.kind == StructureKind::Topological) {
    const State& q = s.at("Q");
    const State& g = s.at("G");
    const State& t = s.at("T");
    for (std::size_t k = 0; k < probes.size(); ++k) {
      rep.expect("Q0^2.probe" + std::to_string(k), mc.act(q, 0, mc.act(q, 0, probes[k])), {}, "paper");
    }
    for (long n = -1; n <= 1; ++n) {
      mc.bracket("T_n=[Q0,G_n].n=" + std::to_string(n), q, 0, g, n + 1,
                 [&](const State& p) { return mc.act(t, n + 1, p); });
    }
    return rep;
  }

  const State& nu = s.at("nu");
  for (long m = -2; m <= 2; ++m) {
    for (long n = -2; n <= 2; ++n) {
      const Rational central = c * frac(m * m * m - m, 12) * delta(m + n);
      mc.bracket("[L,L].m=" + std::to_string(m) + ".n=" + std::to_string(n), nu, m + 1, nu, n + 1,
                 [&](const State& p) { return Rational(m - n) * mc.act(nu, m + n + 1, p) + central * p; });
    }
  }

  // Half-integers r are passed doubled.
  const int rs[] = {-3, -1, 1, 3};
  const auto gmode = [](int r2) { return static_cast<long>((r2 + 1) / 2); };
  const auto name = [](const std::string& base, int r2, long n) {
    return base + ".r=" + to_string(half(r2)) + ".n=" + std::to_string(n);
  };
  const auto name2 = [](const std::string& base, int r2, int s2) {
    return base + ".r=" + to_string(half(r2)) + ".s=" + to_string(half(s2));
  };

  if (s.kind == StructureKind::N1) {
    const State& tau = s.at("tau");
    for (int r2 : rs) {
      for (int s2 : rs) {
        const long sum = (r2 + s2) / 2;
        const Rational central = (c / 3) * (half(r2) * half(r2) - frac(1, 4)) * delta(sum);
        mc.bracket(name2("[G,G]", r2, s2), tau, gmode(r2), tau, gmode(s2),
                   [&](const State& p) { return 2 * mc.act(nu, sum + 1, p) + central * p; });
      }
      for (long m = -1; m <= 1; ++m) {
        mc.bracket(name("[L,G]", r2, m), nu, m + 1, tau, gmode(r2), [&](const State& p) {
          return (frac(m, 2) - half(r2)) * mc.act(tau, gmode(r2 + 2 * static_cast<int>(m)), p);
        });
      }
    }
    return rep;
  }

  if (s.kind == StructureKind::N2 || s.kind == StructureKind::N4) {
    const State& tp = s.at("tau+");
    const State& tm = s.at("tau-");
    const State& j = s.at("j");
    for (long m = -2; m <= 2; ++m) {
      for (long n = -2; n <= 2; ++n) {
        mc.bracket("[J,J].m=" + std::to_string(m) + ".n=" + std::to_string(n), j, m, j, n,
                   [&](const State& p) { return (c / 3) * Rational(m * delta(m + n)) * p; });
        mc.bracket("[L,J].m=" + std::to_string(m) + ".n=" + std::to_string(n), nu, m + 1, j, n,
                   [&](const State& p) { return Rational(-n) * mc.act(j, m + n, p); });
      }
    }
    for (int r2 : rs) {
      for (long m = -1; m <= 1; ++m) {
        const int shifted = r2 + 2 * static_cast<int>(m);
        for (const auto& [label, g, sign] : {std::tuple{"+", &tp, 1}, std::tuple{"-", &tm, -1}}) {
          mc.bracket(name(std::string("[J,G") + label + "]", r2, m), j, m, *g, gmode(r2),
                     [&](const State& p) { return Rational(sign) * mc.act(*g, gmode(shifted), p); });
          mc.bracket(name(std::string("[L,G") + label + "]", r2, m), nu, m + 1, *g, gmode(r2), [&](const State& p) {
            return (frac(m, 2) - half(r2)) * mc.act(*g, gmode(shifted), p);
          });
        }
      }
      for (int s2 : rs) {
        const long sum = (r2 + s2) / 2;
        const Rational central = (c / 6) * (half(r2) * half(r2) - frac(1, 4)) * delta(sum);
        mc.bracket(name2("[G-,G+]", r2, s2), tm, gmode(r2), tp, gmode(s2), [&](const State& p) {
          return mc.act(nu, sum + 1, p) - (half(r2 - s2) / 2) * mc.act(j, sum, p) + central * p;
        });
        mc.bracket(name2("[G+,G+]", r2, s2), tp, gmode(r2), tp, gmode(s2), [](const State&) { return State{}; });
        mc.bracket(name2("[G-,G-]", r2, s2), tm, gmode(r2), tm, gmode(s2), [](const State&) { return State{}; });
      }
    }
  }
  return rep;
}

}  // namespace scva
