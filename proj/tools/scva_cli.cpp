// scva: command-line front end for the free-field vertex algebra engine.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error,
// 3 basis budget exceeded.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "scva/brst.hpp"
#include "scva/characters.hpp"
#include "scva/holonomy.hpp"
#include "scva/parser.hpp"
#include "scva/structures.hpp"

using namespace scva;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SpaceArgs {
  int dim = 0;
  std::string sector = "NS";
  bool polarized = false;
  bool quaternionic = false;
};

struct Options {
  SpaceArgs space;
  bool json = false;
  std::size_t budget = 0;  // 0: module default or SCVA_BASIS_BUDGET
};

Sector parse_sector(const std::string& s) {
  if (s == "NS" || s == "ns") return Sector::NS;
  if (s == "R" || s == "r") return Sector::R;
  throw UsageError("unknown sector '" + s + "' (NS or R)");
}

SpaceSpec space_of(const SpaceArgs& a, int default_dim, bool force_polarized = false, bool force_quaternionic = false) {
  const int dim = a.dim > 0 ? a.dim : default_dim;
  const bool quat = a.quaternionic || force_quaternionic;
  const Sector sector = parse_sector(a.sector);
  // R forces a polarization; so do the N=2 family structures.
  const bool pol = a.polarized || quat || force_polarized || sector == Sector::R;
  return make_space(dim, sector, pol, quat);
}

std::size_t budget_of(const Options& o, std::size_t fallback) {
  if (o.budget > 0) return o.budget;
  if (const char* env = std::getenv("SCVA_BASIS_BUDGET")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("SCVA_BASIS_BUDGET must be a positive integer, got '") + env + "'");
  }
  return fallback;
}

json space_json(const SpaceSpec& s) {
  return {{"dim", s.dim},
          {"sector", s.sector == Sector::NS ? "NS" : "R"},
          {"polarized", s.polarized},
          {"quaternionic", s.quaternionic}};
}

json check_json(const Check& c) {
  json j{{"ope_id", c.id},
         {"expected_source", c.source},
         {"lhs", format_state(c.lhs)},
         {"rhs", format_state(c.rhs)},
         {"equal", c.equal},
         {"kind", c.kind == Check::Kind::Required ? "required" : "informational"}};
  j["pole"] = c.pole ? json(*c.pole) : json(nullptr);
  j["note"] = c.note;
  return j;
}

json report_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks()) checks.push_back(check_json(c));
  return {{"title", r.title()}, {"passed", r.passed()}, {"failures", r.failures()}, {"checks", checks}};
}

json envelope(const std::string& command) { return {{"schema", "scva-report/1"}, {"command", command}}; }

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_report(const Report& r) {
  std::cout << "== " << r.title() << "\n";
  for (const auto& c : r.checks()) {
    const char* tag = c.equal ? "PASS" : (c.failed() ? "FAIL" : "DIFF");
    if (c.kind == Check::Kind::Informational && c.equal) tag = "INFO";
    std::cout << tag << "  " << c.id << "  [" << c.source << "]";
    if (!c.note.empty()) std::cout << "  " << c.note;
    std::cout << "\n";
    if (!c.equal && !(c.lhs.is_zero() && c.rhs.is_zero())) {
      std::cout << "      computed: " << format_state(c.lhs) << "\n";
      std::cout << "      expected: " << format_state(c.rhs) << "\n";
    }
  }
  std::cout << r.checks().size() << " checks, " << r.failures() << " failed\n";
}

int emit_reports(const Options& o, const std::string& command, const SpaceSpec& sp, const std::vector<Report>& reps) {
  bool ok = true;
  for (const auto& r : reps) ok = ok && r.passed();
  if (o.json) {
    json j = envelope(command);
    j["space"] = space_json(sp);
    j["passed"] = ok;
    j["reports"] = json::array();
    for (const auto& r : reps) j["reports"].push_back(report_json(r));
    print_json(j);
  } else {
    for (const auto& r : reps) print_report(r);
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kPass : kFail;
}

// ---- verify

int cmd_verify(const Options& o, const std::string& kind, const std::string& lambda, const std::string& twist_arg,
               const std::string& a_arg) {
  std::vector<Report> reps;
  SpaceSpec sp;
  if (kind == "boson") {
    sp = space_of(o.space, 1);
    reps.push_back(verify(conformal_boson(sp)));
  } else if (kind == "fermion") {
    sp = space_of(o.space, 1);
    reps.push_back(verify(conformal_fermion(sp)));
  } else if (kind == "lambda") {
    sp = space_of(o.space, 2, true);
    reps.push_back(verify(polarized_fermion_conformal(sp, parse_rational(lambda))));
  } else if (kind == "n1") {
    sp = space_of(o.space, 1);
    reps.push_back(verify(n1_structure(sp)));
  } else if (kind == "n1-from-n2") {
    sp = space_of(o.space, 2, true);
    reps.push_back(verify(n1_from_n2(n2_structure(sp), parse_rational(a_arg))));
  } else if (kind == "n2") {
    sp = space_of(o.space, 2, true);
    reps.push_back(verify(n2_structure(sp)));
  } else if (kind == "n4") {
    sp = space_of(o.space, 4, true, true);
    reps.push_back(verify(n4_structure(sp)));
  } else if (kind == "topological") {
    sp = space_of(o.space, 2, true);
    std::vector<Twist> which;
    if (twist_arg == "A" || twist_arg == "both") which.push_back(Twist::A);
    if (twist_arg == "B" || twist_arg == "both") which.push_back(Twist::B);
    if (which.empty()) throw UsageError("--twist must be A, B or both");
    for (Twist t : which) reps.push_back(verify(twist(n2_structure(sp), t)));
  } else {
    throw UsageError("unknown structure '" + kind + "'");
  }
  return emit_reports(o, "verify " + kind, sp, reps);
}

// ---- ope

// "@name" refers to a distinguished vector; anything else is state text.
State resolve_state(const SpaceSpec& sp, const std::string& text) {
  if (text.empty() || text[0] != '@') return parse_state(text, sp);
  const std::string name = text.substr(1);
  if (name == "Phi" || name == "X" || name == "K" || name == "M") {
    const G2States g = g2_states(sp);
    return name == "Phi" ? g.phi : name == "X" ? g.x : name == "K" ? g.k : g.m;
  }
  if (name == "Omega" || name == "OmegaHat") {
    const QKStates q = qk_states(sp);
    return name == "Omega" ? q.big_omega : q.omega_hat;
  }
  if (name == "X+" || name == "X-" || name == "Y+" || name == "Y-") {
    const CYStates c = cy_states(sp);
    if (name == "X+") return c.x_plus;
    if (name == "X-") return c.x_minus;
    return name == "Y+" ? c.y_plus : c.y_minus;
  }
  if (name == "nu_B") return conformal_boson(sp).at("nu");
  if (name == "nu_F") return conformal_fermion(sp).at("nu");
  const StructureSpec s = sp.polarized ? (sp.quaternionic ? n4_structure(sp) : n2_structure(sp)) : n1_structure(sp);
  auto it = s.vectors.find(name);
  if (it == s.vectors.end()) throw UsageError("unknown named state '" + text + "'");
  return it->second;
}

int cmd_ope(const Options& o, const std::string& a_text, const std::string& b_text) {
  const SpaceSpec sp = space_of(o.space, 1);
  const State a = resolve_state(sp, a_text);
  const State b = resolve_state(sp, b_text);
  const OpeSingularPart ope = ope_singular(sp, a, b);
  if (o.json) {
    json j = envelope("ope");
    j["space"] = space_json(sp);
    j["a"] = format_state(a);
    j["b"] = format_state(b);
    j["poles"] = json::array();
    for (const auto& p : ope) j["poles"].push_back({{"order", p.order}, {"coefficient", format_state(p.coefficient)}});
    print_json(j);
  } else {
    if (ope.empty()) std::cout << "no singular part\n";
    for (const auto& p : ope) std::cout << "pole " << p.order << ": " << format_state(p.coefficient) << "\n";
  }
  return kPass;
}

// ---- brst

int cmd_brst(const Options& o, int dim_tprime, const std::string& twist_arg, int cutoff) {
  if (dim_tprime <= 0) throw UsageError("--dimTprime must be positive");
  if (cutoff < 0) throw UsageError("--cutoff must be nonnegative");
  const SpaceSpec sp = make_space(2 * dim_tprime, parse_sector(o.space.sector), true);
  Twist tw;
  if (twist_arg == "A") {
    tw = Twist::A;
  } else if (twist_arg == "B") {
    tw = Twist::B;
  } else {
    throw UsageError("--twist must be A or B");
  }
  const auto blocks = brst_blocks(sp, tw, cutoff, budget_of(o, kDefaultBasisBudget));
  const auto dims = cohomology_dims(blocks);
  const Report square = brst_square_check(blocks);
  std::size_t total = 0;
  for (const auto& e : dims) total += e.dim;

  if (o.json) {
    json j = envelope("brst");
    j["space"] = space_json(sp);
    j["twist"] = twist_arg;
    j["cutoff"] = cutoff;
    j["total"] = total;
    j["q0_squared_zero"] = square.passed();
    j["blocks"] = json::array();
    for (const auto& e : dims)
      j["blocks"].push_back(
          {{"weight", to_string(e.weight)}, {"charge", e.charge}, {"chain_dim", e.chain_dim}, {"dim", e.dim}});
    print_json(j);
  } else {
    std::cout << describe(sp) << ", twist " << twist_arg << ", twisted weight <= " << cutoff << "\n";
    std::cout << "weight  charge  chains  H\n";
    for (const auto& e : dims) {
      std::cout << std::setw(6) << to_string(e.weight) << "  " << std::setw(6) << e.charge << "  " << std::setw(6)
                << e.chain_dim << "  " << e.dim << "\n";
    }
    std::cout << "total " << total << "\n";
    std::cout << "Q0^2 = 0: " << (square.passed() ? "yes" : "NO") << "\n";
  }
  return square.passed() ? kPass : kFail;
}

// ---- character

json series_json(const QYSeries& s) {
  json terms = json::array();
  for (const auto& [k, c] : s.coeffs) terms.push_back({{"q2", k.first}, {"y", k.second}, {"coeff", c.get_str()}});
  return {{"prefactor_num", s.prefactor.get_num().get_str()},
          {"prefactor_den", s.prefactor.get_den().get_str()},
          {"cutoff2", s.cutoff2},
          {"terms", terms}};
}

int cmd_character(const Options& o, const std::string& grading_arg, const std::string& cutoff_arg, bool check_product,
                  bool sign, const std::string& format) {
  Grading g;
  if (grading_arg == "untwisted" || grading_arg == "N2" || grading_arg == "n2") {
    g = Grading::Untwisted;
  } else if (grading_arg == "A") {
    g = Grading::A;
  } else if (grading_arg == "B") {
    g = Grading::B;
  } else {
    throw UsageError("--grading must be untwisted, A or B");
  }
  const Rational cutoff = parse_rational(cutoff_arg);
  if (cutoff < 0 || Rational(2 * cutoff).get_den() != 1) throw UsageError("--cutoff must be a nonnegative multiple of 1/2");
  const int cutoff2 = static_cast<int>(Rational(2 * cutoff).get_num().get_si());
  const SpaceSpec sp = space_of(o.space, 2, g != Grading::Untwisted);

  const QYSeries enumerated = enumerate_character(sp, g, cutoff2, sign, budget_of(o, 200000));
  std::optional<Report> cmp;
  if (check_product) cmp = compare_characters(enumerated, product_character(sp, g, cutoff2, sign));

  if (o.json) {
    json j = envelope("character");
    j["space"] = space_json(sp);
    j["grading"] = g == Grading::Untwisted ? "untwisted" : grading_arg;
    j["fermion_sign"] = sign;
    j["series"] = series_json(enumerated);
    if (cmp) {
      j["product_match"] = cmp->passed();
      if (const Check* bad = cmp->first_failure()) j["first_mismatch"] = check_json(*bad);
    }
    print_json(j);
  } else {
    std::cout << describe(sp) << ", grading " << (g == Grading::Untwisted ? "untwisted" : grading_arg) << "\n";
    if (format == "table") {
      std::cout << format_table(enumerated);
    } else {
      std::cout << format_series(enumerated) << "\n";
    }
    if (cmp) {
      if (cmp->passed()) {
        std::cout << "MATCH\n";
      } else {
        const Check* bad = cmp->first_failure();
        std::cout << "MISMATCH at " << bad->id << ": enumerated " << format_state(bad->lhs) << ", product "
                  << format_state(bad->rhs) << "\n";
      }
    }
  }
  return !cmp || cmp->passed() ? kPass : kFail;
}

// ---- holonomy

int cmd_holonomy(const Options& o, const std::string& which, int n) {
  if (which == "g2") {
    const SpaceSpec sp = make_space(7, Sector::NS, false);
    return emit_reports(o, "holonomy g2", sp, {g2_check(sp)});
  }
  if (n <= 0) throw UsageError("--n must be positive");
  if (which == "qk") {
    if (parse_sector(o.space.sector) != Sector::NS) throw UsageError("holonomy qk needs the NS sector");
    const SpaceSpec sp = make_space(4 * n, Sector::NS, false);
    return emit_reports(o, "holonomy qk", sp, {qk_check(sp)});
  }
  if (which == "cy") {
    const SpaceSpec sp = make_space(2 * n, parse_sector(o.space.sector), true);
    return emit_reports(o, "holonomy cy", sp, {cy_check(sp)});
  }
  throw UsageError("unknown holonomy case '" + which + "' (g2, qk or cy)");
}

// ---- conventions

const std::vector<std::pair<std::string, std::string>> kConventions = {
    {"scalars", "exact rationals (GMP); no floating point anywhere"},
    {"mode indices", "stored doubled; NS fermions half-odd, bosons and R fermions integral"},
    {"creation modes", "bosons idx <= -1; NS fermions idx <= -1/2; R: phi idx <= 0, psi idx <= -1"},
    {"R zero modes", "phi^i_0 creates (exterior product on Lambda(T')); psi^i_0 contracts phi^i_0"},
    {"monomial order", "letters phi < psi < a < b < c, then generator, then index; fermions first"},
    {"pairings", "orthonormal: g(a^i,a^j) = g(phi^i,phi^j) = delta; polarized: g(b^i,c^j) = g(phi^i,psi^j) = delta"},
    {"Koszul sign", "an operator anticommutes past each fermionic creation mode to its left"},
    {"fields", "Y of a monomial = left-nested :d^(j1)u1 (:d^(j2)u2 (...):): of divided derivatives"},
    {"translation", "T u_(p) = -p u_(p-1) as a derivation; T phi_{-1/2} = phi_{-3/2}"},
    {"weights", "mode u_{-r} has weight r; R: phi_{-n+1} and psi_{-n} have weight n - 1/2"},
    {"charge", "psi modes +1, phi modes -1 (polarized only)"},
    {"twisted weight", "A: L0 - J0/2, B: L0 + J0/2; BRST Q0 = tau+_(0) (A), tau-_(0) (B)"},
    {"N=2 normalization", "tau-(z)tau+(w) ~ (c/3)/(z-w)^3 - j/(z-w)^2 + (nu - Tj/2)/(z-w)"},
    {"character prefactor", "q^{-dim T/16}, kept symbolic and excluded from the cutoff"},
    {"OPE ids", "<id>.pole<k> is the coefficient of (z-w)^{-k}, i.e. a_(k-1) b"},
};

int cmd_conventions(const Options& o) {
  if (o.json) {
    json j = envelope("conventions");
    json c = json::object();
    for (const auto& [k, v] : kConventions) c[k] = v;
    j["conventions"] = c;
    print_json(j);
  } else {
    std::size_t w = 0;
    for (const auto& [k, v] : kConventions) w = std::max(w, k.size());
    for (const auto& [k, v] : kConventions) std::cout << k << std::string(w - k.size() + 2, ' ') << v << "\n";
  }
  return kPass;
}

void add_space_flags(CLI::App* cmd, SpaceArgs& s) {
  cmd->add_option("--dim", s.dim, "dim T");
  cmd->add_option("--sector", s.sector, "NS or R");
  cmd->add_flag("--polarized", s.polarized, "use a polarized basis T = T' + T''");
  cmd->add_flag("--quaternionic", s.quaternionic, "quaternionic pairing (dim divisible by 4)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact free-field vertex algebra engine"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--budget", o.budget, "basis budget (overrides SCVA_BASIS_BUDGET)");

  std::string kind, lambda = "1/2", twist_arg = "both", a_arg = "1";
  auto* verify_cmd = app.add_subcommand("verify", "check a structure's full relation set");
  verify_cmd->add_option("kind", kind, "boson | fermion | lambda | n1 | n1-from-n2 | n2 | n4 | topological")->required();
  verify_cmd->add_option("--lambda", lambda, "lambda for the polarized fermion family");
  verify_cmd->add_option("--twist", twist_arg, "A, B or both (topological)");
  verify_cmd->add_option("--a", a_arg, "a in a tau+ + tau-/a (n1-from-n2)");
  add_space_flags(verify_cmd, o.space);

  std::string a_text, b_text;
  auto* ope_cmd = app.add_subcommand("ope", "singular part of a(z)b(w)");
  ope_cmd->add_option("a", a_text, "state text or @name")->required();
  ope_cmd->add_option("b", b_text, "state text or @name")->required();
  add_space_flags(ope_cmd, o.space);

  int dim_tprime = 1, brst_cutoff = 2;
  std::string brst_twist = "A";
  auto* brst_cmd = app.add_subcommand("brst", "BRST cohomology dimensions");
  brst_cmd->add_option("--dimTprime", dim_tprime, "dim T'");
  brst_cmd->add_option("--twist", brst_twist, "A or B");
  brst_cmd->add_option("--cutoff", brst_cutoff, "maximal twisted weight");
  brst_cmd->add_option("--sector", o.space.sector, "NS or R");

  std::string grading = "untwisted", char_cutoff = "3", format = "series";
  bool check_product = false, sign = false;
  auto* char_cmd = app.add_subcommand("character", "graded character by enumeration");
  char_cmd->add_option("--grading", grading, "untwisted, A or B");
  char_cmd->add_option("--cutoff", char_cutoff, "maximal q exponent (half-integer)");
  char_cmd->add_flag("--check-product", check_product, "compare with the product formula");
  char_cmd->add_flag("--fermion-sign", sign, "insert (-1)^F");
  char_cmd->add_option("--format", format, "series or table");
  add_space_flags(char_cmd, o.space);

  std::string holo;
  int holo_n = 1;
  auto* holo_cmd = app.add_subcommand("holonomy", "special holonomy OPE tables");
  holo_cmd->add_option("case", holo, "g2 | qk | cy")->required();
  holo_cmd->add_option("--n", holo_n, "quaternionic dim / 4, or dim T' for cy");
  holo_cmd->add_option("--sector", o.space.sector, "NS or R (cy)");

  auto* conv_cmd = app.add_subcommand("conventions", "print the frozen sign and ordering conventions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify(o, kind, lambda, twist_arg, a_arg);
    if (*ope_cmd) return cmd_ope(o, a_text, b_text);
    if (*brst_cmd) return cmd_brst(o, dim_tprime, brst_twist, brst_cutoff);
    if (*char_cmd) return cmd_character(o, grading, char_cutoff, check_product, sign, format);
    if (*holo_cmd) return cmd_holonomy(o, holo, holo_n);
    if (*conv_cmd) return cmd_conventions(o);
  } catch (const BudgetExceeded& e) {
    std::cerr << "scva: budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    // SpaceError, StructureError, ParseError, CharacterError, UsageError
    std::cerr << "scva: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
