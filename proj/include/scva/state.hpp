#ifndef SCVA_STATE_HPP
#define SCVA_STATE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "scva/rational.hpp"
#include "scva/space.hpp"

namespace scva {

/// One mode u^gen_idx. The index is stored doubled so NS half-integers stay exact.
struct Mode {
  Letter letter = Letter::A;
  int gen = 1;   ///< 1-based generator index
  int idx2 = 0;  ///< twice the mode index

  bool fermionic() const { return is_fermionic(letter); }
  Rational index() const { return half(idx2); }

  auto operator<=>(const Mode&) const = default;
};

/// Ordered list of creation modes, sorted by the canonical order on Mode.
/// Bosonic modes repeat with multiplicity; fermionic modes are distinct.
using Monomial = std::vector<Mode>;

int fermion_count(const Monomial& m);
inline bool is_odd(const Monomial& m) { return fermion_count(m) % 2 == 1; }

/// Finite linear combination of canonical monomials with nonzero rational
/// coefficients.
class State {
 public:
  using Terms = std::map<Monomial, Rational>;

  State() = default;
  static State vacuum();
  static State of(Monomial m, const Rational& c = 1);

  /// Adds c * m; m must already be canonical.
  void add(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  Rational coefficient(const Monomial& m) const;

  State& operator+=(const State& o);
  State& operator-=(const State& o);
  State& operator*=(const Rational& c);

  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator-(State a, const State& b) { return a -= b; }
  friend State operator-(State a) { return a *= -1; }
  friend State operator*(const Rational& c, State a) { return a *= c; }
  friend State operator*(State a, const Rational& c) { return a *= c; }

  bool operator==(const State& o) const { return terms_ == o.terms_; }

  /// Components with an even / odd number of fermionic modes.
  State even_part() const;
  State odd_part() const;
  /// True if every monomial has the same fermion parity (vacuum and zero are even).
  bool parity_homogeneous() const;
  bool odd() const;

 private:
  Terms terms_;
};

}  // namespace scva

#endif  // SCVA_STATE_HPP
