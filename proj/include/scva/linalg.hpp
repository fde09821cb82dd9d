#ifndef SCVA_LINALG_HPP
#define SCVA_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "scva/fock.hpp"

namespace scva {

/// Rank by fraction-free (Bareiss) elimination; rows are cleared of
/// denominators first so every intermediate entry is an integer.
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0} for a rows x cols matrix with the given column count.
std::vector<std::vector<Rational>> nullspace(const Matrix& m, std::size_t cols);

/// A subspace of states kept in reduced echelon form: every row has a pivot
/// monomial with coefficient 1 that no other row contains.
class StateSpan {
 public:
  /// Adds v to the span. Returns false if v was already in it.
  bool insert(const State& v);
  /// Canonical representative of v modulo the span.
  State reduce(State v) const;
  bool contains(const State& v) const { return reduce(v).is_zero(); }
  std::size_t dim() const { return rows_.size(); }

 private:
  std::vector<std::pair<Monomial, State>> rows_;
};

}  // namespace scva

#endif  // SCVA_LINALG_HPP
