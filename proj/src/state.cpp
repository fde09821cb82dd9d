#include "scva/state.hpp"

#include <algorithm>

namespace scva {

int fermion_count(const Monomial& m) {
  return static_cast<int>(std::count_if(m.begin(), m.end(), [](const Mode& x) { return x.fermionic(); }));
}

State State::vacuum() { return of({}, 1); }

State State::of(Monomial m, const Rational& c) {
  State s;
  s.add(m, c);
  return s;
}

void State::add(const Monomial& m, const Rational& c) {
  Rational v = c;
  v.canonicalize();
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational State::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

State& State::operator+=(const State& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

State& State::operator-=(const State& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

State& State::operator*=(const Rational& c) {
  Rational k = c;
  k.canonicalize();
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= k;
  return *this;
}

State State::even_part() const {
  State out;
  for (const auto& [m, c] : terms_)
    if (!is_odd(m)) out.terms_.emplace(m, c);
  return out;
}

State State::odd_part() const {
  State out;
  for (const auto& [m, c] : terms_)
    if (is_odd(m)) out.terms_.emplace(m, c);
  return out;
}

bool State::parity_homogeneous() const {
  if (terms_.empty()) return true;
  const bool first = is_odd(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return is_odd(t.first) == first; });
}

bool State::odd() const { return !terms_.empty() && is_odd(terms_.begin()->first); }

}  // namespace scva
