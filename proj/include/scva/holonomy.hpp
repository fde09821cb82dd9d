#ifndef SCVA_HOLONOMY_HPP
#define SCVA_HOLONOMY_HPP

#include <array>
#include <string>
#include <vector>

#include "scva/report.hpp"
#include "scva/structures.hpp"

namespace scva {

/// Exterior product of two states built from creation modes only
/// (a's modes applied to b).
State wedge(const SpaceSpec& space, const State& a, const State& b);

// G2, on the orthonormal NS space of dim 7.

/// phi^i phi^j phi^k at -1/2 for each (i, j, k, sign).
using ThreeForm = std::vector<std::pair<std::array<int, 3>, int>>;
/// The seven wedge terms exactly as displayed.
ThreeForm g2_form_printed();
/// The printed list with e3^e6^e7 replaced by e5^e6^e7 (see the X display).
ThreeForm g2_form_corrected();
State three_form_state(const SpaceSpec& space7, const ThreeForm& f);

struct G2States {
  State phi;
  State x;  ///< (1/6) Phi_(0) Phi
  State k;  ///< tau_(0) Phi
  State m;  ///< tau_(0) X
};
G2States g2_states(const SpaceSpec& space7, const ThreeForm& form = g2_form_printed());

/// The printed eight-term X, reading the last term as -(1/2) sum_i phi^i_{-3/2} phi^i_{-1/2}.
State g2_x_printed(const SpaceSpec& space7);

/// Signed permutations e^i -> s_i e^{p(i)} fixing the 3-form, as (p, s) with
/// p a permutation of 0..6 and s a sign vector.
struct SignedPermutation {
  std::array<int, 7> perm;
  std::array<int, 7> sign;
};
std::vector<SignedPermutation> three_form_stabilizer(const ThreeForm& f);

/// Phi-Phi OPE, weights, primary-type L-Phi poles, the X display diff and the
/// signed-permutation symmetry audit.
Report g2_check(const SpaceSpec& space7);

// Quaternionic-Kaehler, on the orthonormal NS space of dim 4n with frame
// (a^i, b^i, c^i, d^i) = generators (4i-3, 4i-2, 4i-1, 4i).

struct QKStates {
  int n = 1;
  std::array<State, 3> omega;  ///< a^b + c^d, a^c - b^d, a^d + b^c
  State big_omega;             ///< (1/2) sum omega_k ^ omega_k
  State omega_hat;             ///< tau_(0) Omega
};
QKStates qk_states(const SpaceSpec& space4n);

/// The five displayed OPEs (L Omega, Omega Omega, G Omega, L Omega^, G Omega^).
Report qk_check(const SpaceSpec& space4n);

// Calabi-Yau, on a polarized NS or R space with n = dim T'.

struct CYStates {
  int n = 1;
  State x_plus, x_minus, y_plus, y_minus;
};
CYStates cy_states(const SpaceSpec& space2n);

/// The general table for any n plus the extra tables for n = 2 and n = 3.
Report cy_check(const SpaceSpec& space2n);

}  // namespace scva

#endif  // SCVA_HOLONOMY_HPP
