#ifndef SCVA_BRST_HPP
#define SCVA_BRST_HPP

#include <cstddef>
#include <vector>

#include "scva/linalg.hpp"
#include "scva/report.hpp"
#include "scva/structures.hpp"

namespace scva {

/// Default cap on the number of monomials in one block.
inline constexpr std::size_t kDefaultBasisBudget = 20000;

/// The twisted-weight / charge block (weight, charge) of the truncated complex
/// together with the matrix of Q0 into the block (weight, target_charge).
/// Charge is the untwisted J0 charge, so target_charge = charge + 1 for the
/// A twist (Q = tau+) and charge - 1 for the B twist (Q = tau-).
struct TruncatedBlock {
  Twist twist = Twist::A;
  int weight2 = 0;
  int charge = 0;
  std::vector<Monomial> basis;
  int target_charge = 0;
  /// rows index the target block's basis, columns index `basis`
  Matrix q;

  Rational weight() const { return half(weight2); }
};

/// All blocks of twisted weight <= cutoff, ordered by (weight, charge).
/// Throws StructureError on an unpolarized space and BudgetExceeded when a
/// block would exceed `budget` monomials.
std::vector<TruncatedBlock> brst_blocks(const SpaceSpec& space, Twist twist, int cutoff,
                                        std::size_t budget = kDefaultBasisBudget);

struct CohomologyEntry {
  Rational weight;
  int charge = 0;
  std::size_t chain_dim = 0;
  std::size_t dim = 0;
};

/// dim H = dim C - rank(Q0 out of the block) - rank(Q0 into the block), per block.
std::vector<CohomologyEntry> cohomology_dims(const std::vector<TruncatedBlock>& blocks);
std::vector<CohomologyEntry> cohomology_dims(const SpaceSpec& space, Twist twist, int cutoff,
                                             std::size_t budget = kDefaultBasisBudget);

/// Q0^2 = 0 as a matrix identity on every pair of consecutive blocks.
Report brst_square_check(const std::vector<TruncatedBlock>& blocks);

/// Representatives psi^{j1}...psi^{jk}|0> (A twist) or phi^{j1}...phi^{jk}|0>
/// (B twist) built from the lowest creation modes: checks they are closed and
/// nonzero in cohomology, and that their normally ordered products reproduce
/// the exterior-algebra table modulo im Q0.
Report cohomology_ring_check(const SpaceSpec& space, Twist twist, int cutoff,
                             std::size_t budget = kDefaultBasisBudget);

/// For every v in ker Q0 and n in {-1, 0, 1}: T_n v lies in im Q0 (whenever
/// T_n v stays below the cutoff).
Report trivial_representation_check(const SpaceSpec& space, Twist twist, int cutoff,
                                    std::size_t budget = kDefaultBasisBudget);

}  // namespace scva

#endif  // SCVA_BRST_HPP
