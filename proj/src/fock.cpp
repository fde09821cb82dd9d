#include "scva/fock.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace scva {

namespace {

bool integer_modes(const SpaceSpec& space, const Mode& m) {
  return !m.fermionic() || space.sector == Sector::R;
}

std::string mode_text(const Mode& m) {
  return letter_name(m.letter) + std::to_string(m.gen) + "_{" + to_string(m.index()) + "}";
}

// Inserts a creation mode; returns false if the result vanishes (repeated
// fermion). `sign` receives the Koszul sign of moving the mode into place.
bool insert_creation(Monomial& mono, const Mode& m, int& sign) {
  auto pos = std::lower_bound(mono.begin(), mono.end(), m);
  if (m.fermionic()) {
    if (pos != mono.end() && *pos == m) return false;
    sign = (std::distance(mono.begin(), pos) % 2 == 0) ? 1 : -1;
  } else {
    sign = 1;
  }
  mono.insert(pos, m);
  return true;
}

}  // namespace

void validate_mode(const SpaceSpec& space, const Mode& m) {
  if (!space.has_letter(m.letter))
    throw SpaceError("unknown generator " + letter_name(m.letter) + " in " + describe(space));
  if (m.gen < 1 || m.gen > space.rank())
    throw SpaceError("generator index out of range: " + mode_text(m));
  const bool even_idx2 = m.idx2 % 2 == 0;
  if (even_idx2 != integer_modes(space, m))
    throw SpaceError("mode index has wrong parity class for sector: " + mode_text(m));
}

bool is_creation(const SpaceSpec& space, const Mode& m) {
  if (!m.fermionic() || space.sector == Sector::NS) return m.idx2 < 0;
  if (m.letter == Letter::Phi) return m.idx2 <= 0;
  return m.idx2 <= -2;
}

State apply_mode(const SpaceSpec& space, const Mode& m, const State& s) {
  validate_mode(space, m);
  State out;
  if (is_creation(space, m)) {
    for (const auto& [mono, c] : s) {
      Monomial next = mono;
      int sign = 1;
      if (insert_creation(next, m, sign)) out.add(next, sign == 1 ? c : Rational(-c));
    }
    return out;
  }
  if (!m.fermionic() && m.idx2 == 0) return out;

  // Annihilator: contract the g-paired creation mode at the opposite index.
  const Mode target{space.partner(m.letter), m.gen, -m.idx2};
  for (const auto& [mono, c] : s) {
    auto pos = std::lower_bound(mono.begin(), mono.end(), target);
    if (pos == mono.end() || *pos != target) continue;
    Monomial next = mono;
    if (target.fermionic()) {
      const auto offset = std::distance(mono.begin(), pos);
      next.erase(next.begin() + offset);
      out.add(next, offset % 2 == 0 ? c : Rational(-c));
    } else {
      const auto mult = std::count(mono.begin(), mono.end(), target);
      next.erase(next.begin() + std::distance(mono.begin(), pos));
      out.add(next, c * Rational(m.idx2 / 2) * Rational(static_cast<long>(mult)));
    }
  }
  return out;
}

State apply_modes(const SpaceSpec& space, std::span<const Mode> ops, const State& s) {
  State cur = s;
  for (auto it = ops.rbegin(); it != ops.rend() && !cur.is_zero(); ++it) cur = apply_mode(space, *it, cur);
  return cur;
}

Mode field_mode(const SpaceSpec& space, Letter l, int gen, long n) {
  long idx2 = 2 * n;
  if (is_fermionic(l)) {
    if (space.sector == Sector::NS) {
      idx2 = 2 * n + 1;
    } else if (l == Letter::Phi) {
      idx2 = 2 * n + 2;
    }
  }
  return Mode{l, gen, static_cast<int>(idx2)};
}

long field_index(const SpaceSpec& space, const Mode& m) {
  if (m.fermionic()) {
    if (space.sector == Sector::NS) return (m.idx2 - 1) / 2;
    if (m.letter == Letter::Phi) return m.idx2 / 2 - 1;
  }
  return m.idx2 / 2;
}

Mode creation_mode(const SpaceSpec& space, Letter l, int gen, int level) {
  return field_mode(space, l, gen, -1 - level);
}

State make_state(const SpaceSpec& space, std::span<const Mode> modes, const Rational& c) {
  for (const auto& m : modes)
    if (!is_creation(space, m)) throw SpaceError("annihilation mode in a ket: " + mode_text(m));
  return c * apply_modes(space, modes, State::vacuum());
}

int degree2(const Monomial& m) {
  int d = 0;
  for (const auto& x : m) d -= x.idx2;
  return d;
}

int max_degree2(const State& s) {
  int d = 0;
  for (const auto& [m, c] : s) d = std::max(d, degree2(m));
  return d;
}

int mode_charge(const Mode& m) {
  if (m.letter == Letter::Psi) return 1;
  // An orthonormal phi carries no U(1) charge; callers pass polarized spaces
  // whenever charge matters, where phi spans T'.
  if (m.letter == Letter::Phi) return -1;
  return 0;
}

int mode_weight2(const SpaceSpec& space, const Mode& m, Grading g) {
  int w = -m.idx2;
  if (m.fermionic() && space.sector == Sector::R) w += (m.letter == Letter::Phi) ? 1 : -1;
  if (!space.polarized || !m.fermionic()) return w;
  switch (g) {
    case Grading::Untwisted: return w;
    case Grading::A: return w - mode_charge(m);
    case Grading::B: return w + mode_charge(m);
  }
  return w;
}

int weight2(const SpaceSpec& space, const Monomial& m, Grading g) {
  int w = 0;
  for (const auto& x : m) w += mode_weight2(space, x, g);
  return w;
}

int charge(const Monomial& m) {
  int q = 0;
  for (const auto& x : m) q += mode_charge(x);
  return q;
}

std::vector<GradedComponent> grading(const SpaceSpec& space, const State& s, Grading g) {
  std::map<std::pair<int, int>, State> parts;
  for (const auto& [m, c] : s) {
    const int q = space.polarized ? charge(m) : 0;
    parts[{weight2(space, m, g), q}].add(m, c);
  }
  std::vector<GradedComponent> out;
  for (auto& [key, st] : parts) out.push_back({half(key.first), key.second, std::move(st)});
  return out;
}

std::vector<Mode> creation_modes_up_to(const SpaceSpec& space, Grading g, int max_weight2) {
  std::vector<Mode> out;
  for (Letter l : {Letter::Phi, Letter::Psi, Letter::A, Letter::B, Letter::C}) {
    if (!space.has_letter(l)) continue;
    for (int gen = 1; gen <= space.rank(); ++gen) {
      for (int level = 0;; ++level) {
        const Mode m = creation_mode(space, l, gen, level);
        const int w = mode_weight2(space, m, g);
        if (w > max_weight2) break;
        out.push_back(m);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void enumerate_rec(const SpaceSpec& space, Grading g, const std::vector<Mode>& modes, std::size_t i,
                   int remaining, Monomial& cur, std::vector<Monomial>& out, std::size_t budget) {
  if (i == modes.size()) {
    if (out.size() >= budget)
      throw BudgetExceeded("basis budget of " + std::to_string(budget) + " monomials exceeded");
    out.push_back(cur);
    return;
  }
  const Mode& m = modes[i];
  const int w = mode_weight2(space, m, g);
  const int max_mult = m.fermionic() ? 1 : (w == 0 ? 0 : remaining / w);
  for (int k = 0; k <= max_mult && k * w <= remaining; ++k) {
    for (int r = 0; r < k; ++r) cur.push_back(m);
    enumerate_rec(space, g, modes, i + 1, remaining - k * w, cur, out, budget);
    cur.resize(cur.size() - k);
  }
}

}  // namespace

std::vector<Monomial> enumerate_monomials(const SpaceSpec& space, Grading g, int max_weight2,
                                          std::size_t budget) {
  std::vector<Monomial> out;
  if (max_weight2 < 0) return out;
  const auto modes = creation_modes_up_to(space, g, max_weight2);
  Monomial cur;
  enumerate_rec(space, g, modes, 0, max_weight2, cur, out, budget);
  return out;
}

State transform(const SpaceSpec& space, const State& s, const std::map<Letter, Matrix>& change) {
  State out;
  for (const auto& [mono, c] : s) {
    State acc = State::vacuum();
    for (auto it = mono.rbegin(); it != mono.rend(); ++it) {
      auto found = change.find(it->letter);
      if (found == change.end()) {
        acc = apply_mode(space, *it, acc);
        continue;
      }
      const Matrix& mat = found->second;
      State next;
      for (int j = 1; j <= space.rank(); ++j) {
        const Rational& coeff = mat[j - 1][it->gen - 1];
        if (coeff == 0) continue;
        next += coeff * apply_mode(space, Mode{it->letter, j, it->idx2}, acc);
      }
      acc = std::move(next);
    }
    out += c * acc;
  }
  return out;
}

}  // namespace scva
