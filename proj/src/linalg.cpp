#include "scva/linalg.hpp"

namespace scva {

std::size_t rank(const Matrix& in) {
  if (in.empty()) return 0;
  const std::size_t rows = in.size();
  const std::size_t cols = in[0].size();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (const auto& x : in[i]) l = lcm(l, Integer(x.get_den()));
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = in[i][j].get_num() * (l / in[i][j].get_den());
  }

  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::vector<std::vector<Rational>> nullspace(const Matrix& in, std::size_t cols) {
  Matrix a = in;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][f];
    out.push_back(std::move(v));
  }
  return out;
}

State StateSpan::reduce(State v) const {
  for (const auto& [pivot, row] : rows_) {
    const Rational c = v.coefficient(pivot);
    if (c != 0) v -= c * row;
  }
  return v;
}

bool StateSpan::insert(const State& v) {
  State r = reduce(v);
  if (r.is_zero()) return false;
  const Monomial pivot = r.begin()->first;
  r *= 1 / r.begin()->second;
  for (auto& [p, row] : rows_) {
    const Rational c = row.coefficient(pivot);
    if (c != 0) row -= c * r;
  }
  rows_.emplace_back(pivot, std::move(r));
  return true;
}

}  // namespace scva
