#ifndef SCVA_FOCK_HPP
#define SCVA_FOCK_HPP

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "scva/state.hpp"

namespace scva {

/// Weight/charge bookkeeping used for blocks and characters.
///   Untwisted: L0 and J0 of the N=2 structure (weight 1/2 fermions).
///   A, B:      T0 = L0 -/+ J0/2 of the A/B-twisted topological algebra.
enum class Grading { Untwisted, A, B };

/// Thrown when an enumeration would exceed the configured basis budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mode legality: generator exists in the space and the index is in the
/// parity class of the sector (integers for bosons and R fermions,
/// half-odd integers for NS fermions).
void validate_mode(const SpaceSpec& space, const Mode& m);

/// Creation modes: bosons idx <= -1, NS fermions idx <= -1/2,
/// R phi idx <= 0 (zero mode creates), R psi idx <= -1.
bool is_creation(const SpaceSpec& space, const Mode& m);

/// Action of a single mode operator on a state. Creation modes multiply from
/// the left (Koszul sign for fermions); a boson u_n, n > 0, is n times the
/// contraction with the g-paired u'_{-n}; u_0 acts as zero for bosons;
/// a fermionic annihilator contracts its g-paired creation mode.
State apply_mode(const SpaceSpec& space, const Mode& m, const State& s);

/// ops[0] ops[1] ... ops[k-1] applied to s (rightmost first).
State apply_modes(const SpaceSpec& space, std::span<const Mode> ops, const State& s);

/// The mode u_(n) in the state-field convention Y(u, z) = sum u_(n) z^{-n-1},
/// where u is the lowest creation state of the generator.
Mode field_mode(const SpaceSpec& space, Letter l, int gen, long n);
/// Inverse of field_mode.
long field_index(const SpaceSpec& space, const Mode& m);

/// The level-th creation mode of a generator (level 0 is the lowest:
/// a_{-1}, phi_{-1/2} in NS, phi_0 / psi_{-1} in R).
Mode creation_mode(const SpaceSpec& space, Letter l, int gen, int level = 0);

/// Product of creation modes applied to the vacuum, canonicalized with signs.
State make_state(const SpaceSpec& space, std::span<const Mode> modes, const Rational& c = 1);

/// Twice the mode degree -sum(idx). Nonnegative, additive, and satisfies
/// deg(a_(n) b) = deg a + deg b - n - 1.
int degree2(const Monomial& m);
int max_degree2(const State& s);

/// Twice the weight contributed by one creation mode under a grading.
int mode_weight2(const SpaceSpec& space, const Mode& m, Grading g = Grading::Untwisted);
/// J0 charge of one mode: psi +1, phi -1, bosons 0. Only meaningful in a
/// polarized space; grading() and project() report charge 0 otherwise.
int mode_charge(const Mode& m);
int weight2(const SpaceSpec& space, const Monomial& m, Grading g = Grading::Untwisted);
int charge(const Monomial& m);

struct GradedComponent {
  Rational weight;
  int charge = 0;
  State component;
};

/// Decomposition into simultaneous (L0, J0) eigencomponents, ordered by
/// (weight, charge).
std::vector<GradedComponent> grading(const SpaceSpec& space, const State& s, Grading g = Grading::Untwisted);

/// All creation modes whose weight under g is at most max_weight2 / 2.
std::vector<Mode> creation_modes_up_to(const SpaceSpec& space, Grading g, int max_weight2);

/// Every canonical monomial of total weight <= max_weight2 / 2 under g.
/// Throws BudgetExceeded when more than `budget` monomials would be produced.
std::vector<Monomial> enumerate_monomials(const SpaceSpec& space, Grading g, int max_weight2,
                                          std::size_t budget = 200000);

/// Linear change of generators: u^i -> sum_j M[j][i] u^j for each letter in
/// the map (M is rank x rank). Letters not in the map are left alone.
using Matrix = std::vector<std::vector<Rational>>;
State transform(const SpaceSpec& space, const State& s, const std::map<Letter, Matrix>& change);

}  // namespace scva

#endif  // SCVA_FOCK_HPP
