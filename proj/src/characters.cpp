#include "scva/characters.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

namespace scva {

Integer QYSeries::coefficient(int q2, int y) const {
  auto it = coeffs.find({q2, y});
  return it == coeffs.end() ? Integer(0) : it->second;
}

void QYSeries::add(int q2, int y, const Integer& c) {
  if (q2 > cutoff2 || c == 0) return;
  auto [it, fresh] = coeffs.emplace(std::make_pair(q2, y), c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) coeffs.erase(it);
}

QYSeries QYSeries::at_y1() const {
  QYSeries out{{}, cutoff2, prefactor};
  for (const auto& [k, c] : coeffs) out.add(k.first, 0, c);
  return out;
}

QYSeries QYSeries::inverted_y() const {
  QYSeries out{{}, cutoff2, prefactor};
  for (const auto& [k, c] : coeffs) out.add(k.first, -k.second, c);
  return out;
}

QYSeries operator*(const QYSeries& a, const QYSeries& b) {
  QYSeries out{{}, std::min(a.cutoff2, b.cutoff2), a.prefactor + b.prefactor};
  for (const auto& [ka, ca] : a.coeffs) {
    if (ka.first > out.cutoff2) break;
    for (const auto& [kb, cb] : b.coeffs) {
      if (ka.first + kb.first > out.cutoff2) break;
      out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  return out;
}

QYSeries enumerate_character(const SpaceSpec& space, Grading g, int cutoff2, bool fermion_sign, std::size_t budget) {
  if (g != Grading::Untwisted && !space.polarized)
    throw CharacterError("A/B gradings need a polarized space");
  QYSeries out{{}, cutoff2, frac(-space.dim, 16)};
  for (const auto& m : enumerate_monomials(space, g, cutoff2, budget)) {
    int y = space.polarized ? charge(m) : 0;
    if (g == Grading::B) y = -y;
    out.add(weight2(space, m, g), y, fermion_sign && is_odd(m) ? -1 : 1);
  }
  return out;
}

std::string formula_name(CharacterFormula f) {
  switch (f) {
    case CharacterFormula::Riemannian: return "riemannian";
    case CharacterFormula::N2: return "n2";
    case CharacterFormula::ATwist: return "a_twist";
    case CharacterFormula::BTwist: return "b_twist";
  }
  return "?";
}

namespace {

// Multiplies s by Lambda_t(V) (exterior) or S_t(V) (symmetric) for V of the
// given rank and t = sign * q^{q2/2} y^y.
void multiply_factor(QYSeries& s, bool exterior, int rank, int q2, int y, int sign) {
  if (rank == 0) return;
  QYSeries f{{}, s.cutoff2, 0};
  for (long k = 0;; ++k) {
    if (k * q2 > s.cutoff2 || (exterior && k > rank)) break;
    Integer c = exterior ? binomial(rank, k) : binomial(rank + k - 1, k);
    if (sign < 0 && k % 2 == 1) c = -c;
    f.add(static_cast<int>(k * q2), static_cast<int>(k * y), c);
    if (q2 == 0 && !exterior) throw std::logic_error("S_t with a q^0 variable does not truncate");
  }
  s = s * f;
}

}  // namespace

QYSeries product_character(CharacterFormula f, int dim_t1, int dim_t2, int cutoff2, bool fermion_sign) {
  if (dim_t1 < 0 || dim_t2 < 0) throw CharacterError("negative dimension");
  const int dim_t = f == CharacterFormula::Riemannian ? dim_t1 : dim_t1 + dim_t2;
  QYSeries s{{}, cutoff2, frac(-dim_t, 16)};
  s.add(0, 0, 1);
  const int sign = fermion_sign ? -1 : 1;
  for (int n = 1; 2 * n - 2 <= cutoff2; ++n) {
    switch (f) {
      case CharacterFormula::Riemannian:
        multiply_factor(s, true, dim_t1, 2 * n - 1, 0, sign);
        multiply_factor(s, false, dim_t1, 2 * n, 0, 1);
        continue;
      case CharacterFormula::N2:
        multiply_factor(s, true, dim_t1, 2 * n - 1, -1, sign);
        multiply_factor(s, true, dim_t2, 2 * n - 1, 1, sign);
        break;
      case CharacterFormula::ATwist:
        multiply_factor(s, true, dim_t1, 2 * n, -1, sign);
        multiply_factor(s, true, dim_t2, 2 * n - 2, 1, sign);
        break;
      case CharacterFormula::BTwist:
        multiply_factor(s, true, dim_t1, 2 * n - 2, 1, sign);
        multiply_factor(s, true, dim_t2, 2 * n, -1, sign);
        break;
    }
    multiply_factor(s, false, dim_t1, 2 * n, 0, 1);
    multiply_factor(s, false, dim_t2, 2 * n, 0, 1);
  }
  return s;
}

QYSeries product_character(const SpaceSpec& space, Grading g, int cutoff2, bool fermion_sign) {
  if (!space.polarized) {
    if (g != Grading::Untwisted) throw CharacterError("A/B gradings need a polarized space");
    return product_character(CharacterFormula::Riemannian, space.dim, 0, cutoff2, fermion_sign);
  }
  const int r = space.rank();
  switch (g) {
    case Grading::Untwisted: return product_character(CharacterFormula::N2, r, r, cutoff2, fermion_sign);
    case Grading::A: return product_character(CharacterFormula::ATwist, r, r, cutoff2, fermion_sign);
    case Grading::B: return product_character(CharacterFormula::BTwist, r, r, cutoff2, fermion_sign);
  }
  throw CharacterError("unknown grading");
}

Report compare_characters(const QYSeries& lhs, const QYSeries& rhs) {
  if (lhs.cutoff2 != rhs.cutoff2)
    throw CharacterError("cutoffs differ: " + to_string(half(lhs.cutoff2)) + " vs " + to_string(half(rhs.cutoff2)));
  if (lhs.prefactor != rhs.prefactor)
    throw CharacterError("prefactors differ: " + to_string(lhs.prefactor) + " vs " + to_string(rhs.prefactor));
  Report rep("character comparison to q^" + to_string(half(lhs.cutoff2)));
  std::set<std::pair<int, int>> keys;
  for (const auto& [k, c] : lhs.coeffs) keys.insert(k);
  for (const auto& [k, c] : rhs.coeffs) keys.insert(k);
  for (const auto& k : keys) {
    const std::string id = "q^" + to_string(half(k.first)) + ".y^" + std::to_string(k.second);
    rep.expect(id, State::vacuum() * Rational(lhs.coefficient(k.first, k.second)),
               State::vacuum() * Rational(rhs.coefficient(k.first, k.second)), "derived");
  }
  return rep;
}

namespace {

std::string y_poly(const std::map<int, Integer>& row) {
  std::string out;
  for (const auto& [y, c] : row) {
    std::string mono = y == 0 ? "" : (y == 1 ? "y" : "y^" + std::to_string(y));
    std::string coef = c.get_str();
    if (!mono.empty() && (c == 1 || c == -1)) coef = c == 1 ? "" : "-";
    std::string term = coef + mono;
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

std::string q_power(const Rational& e) {
  if (e == 1) return "q";
  if (e.get_den() == 1) return "q^" + to_string(e);
  return "q^{" + to_string(e) + "}";
}

std::map<int, std::map<int, Integer>> rows(const QYSeries& s) {
  std::map<int, std::map<int, Integer>> out;
  for (const auto& [k, c] : s.coeffs) out[k.first][k.second] = c;
  return out;
}

}  // namespace

std::string format_series(const QYSeries& s) {
  std::string body;
  for (const auto& [q2, row] : rows(s)) {
    std::string p = y_poly(row);
    const bool single = row.size() == 1;
    std::string qpart = q2 == 0 ? "" : q_power(half(q2));
    std::string term;
    if (qpart.empty()) {
      term = p;
    } else if (single && p == "1") {
      term = qpart;
    } else if (single && p == "-1") {
      term = "-" + qpart;
    } else {
      term = (single ? p : "(" + p + ")") + " " + qpart;
    }
    if (body.empty()) {
      body = term;
    } else if (term[0] == '-') {
      body += " - " + term.substr(1);
    } else {
      body += " + " + term;
    }
  }
  if (body.empty()) body = "0";
  body += " + O(" + q_power(half(s.cutoff2 + 1)) + ")";
  if (s.prefactor == 0) return body;
  return q_power(s.prefactor) + " (" + body + ")";
}

std::string format_table(const QYSeries& s) {
  std::set<int> ys;
  for (const auto& [k, c] : s.coeffs) ys.insert(k.second);
  const auto by_row = rows(s);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"q\\y"};
  for (int y : ys) head.push_back(std::to_string(y));
  cells.push_back(head);
  for (int q2 = 0; q2 <= s.cutoff2; ++q2) {
    std::vector<std::string> line{to_string(half(q2))};
    auto it = by_row.find(q2);
    for (int y : ys) {
      Integer c = 0;
      if (it != by_row.end()) {
        auto jt = it->second.find(y);
        if (jt != it->second.end()) c = jt->second;
      }
      line.push_back(c.get_str());
    }
    cells.push_back(line);
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  std::ostringstream out;
  out << "prefactor q^" << to_string(s.prefactor) << "\n";
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out << "  ";
      out << std::string(width[i] - line[i].size(), ' ') << line[i];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace scva
