#ifndef SCVA_CHARACTERS_HPP
#define SCVA_CHARACTERS_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "scva/fock.hpp"
#include "scva/report.hpp"

namespace scva {

/// Truncated q,y-series sum c(q2, y) q^{q2/2} y^y times q^{prefactor}.
/// The prefactor is never folded into the stored exponents and does not
/// count towards the cutoff.
struct QYSeries {
  std::map<std::pair<int, int>, Integer> coeffs;  // (q2, y) -> coefficient, zeros dropped
  int cutoff2 = 0;
  Rational prefactor = 0;

  Integer coefficient(int q2, int y) const;
  void add(int q2, int y, const Integer& c);
  /// y = 1: every y-exponent collapsed to 0.
  QYSeries at_y1() const;
  /// y -> 1/y.
  QYSeries inverted_y() const;
  bool operator==(const QYSeries&) const = default;
};

/// Product truncated at the smaller cutoff; prefactors add.
QYSeries operator*(const QYSeries& a, const QYSeries& b);

class CharacterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sum over the monomial basis of q^{weight} y^{charge}: L0 / J0 for
/// Untwisted, T0 / J0^top for A and B (J0^top = J0 for A, -J0 for B).
/// Unpolarized spaces have no y-grading (every term at y^0).
/// With fermion_sign every monomial carries (-1)^{#fermion modes}.
QYSeries enumerate_character(const SpaceSpec& space, Grading g, int cutoff2, bool fermion_sign = false,
                             std::size_t budget = 200000);

enum class CharacterFormula { Riemannian, N2, ATwist, BTwist };

std::string formula_name(CharacterFormula f);

/// The infinite products, expanded to q^{cutoff2/2}:
///   Riemannian  S_{q^n}(T) Lambda_{q^{n-1/2}}(T)                    (dim_t1 = dim T)
///   N2          Lambda_{y^-1 q^{n-1/2}}(T') Lambda_{y q^{n-1/2}}(T'') S_{q^n}(T') S_{q^n}(T'')
///   ATwist      Lambda_{y^-1 q^n}(T')       Lambda_{y q^{n-1}}(T'')   ...
///   BTwist      Lambda_{y q^{n-1}}(T')      Lambda_{y^-1 q^n}(T'')    ...
/// all times q^{-dim T/16}. dim_t1 = dim T', dim_t2 = dim T'' for the N2 family.
/// fermion_sign replaces Lambda_t by Lambda_{-t}.
QYSeries product_character(CharacterFormula f, int dim_t1, int dim_t2, int cutoff2, bool fermion_sign = false);

/// The formula matching a polarized or orthonormal space under a grading.
QYSeries product_character(const SpaceSpec& space, Grading g, int cutoff2, bool fermion_sign = false);

/// Coefficientwise equality, one check per exponent pair in either series,
/// ordered by (q2, y) so the first failure is the lowest mismatch.
/// Throws CharacterError when cutoffs or prefactors differ.
Report compare_characters(const QYSeries& lhs, const QYSeries& rhs);

/// "q^{-1/8} (1 + (y^-1 + y) q^{1/2} + ...)"-style one-liner.
std::string format_series(const QYSeries& s);
/// One row per q exponent, one column per y exponent.
std::string format_table(const QYSeries& s);

}  // namespace scva

#endif  // SCVA_CHARACTERS_HPP
