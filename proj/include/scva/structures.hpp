#ifndef SCVA_STRUCTURES_HPP
#define SCVA_STRUCTURES_HPP

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "scva/report.hpp"
#include "scva/vertex.hpp"

namespace scva {

enum class StructureKind { Virasoro, N1, N2, N4, Topological };
enum class Twist { A, B };

std::string kind_name(StructureKind k);
std::string twist_name(Twist t);

/// Thrown when a structure is requested on a space that cannot carry it, or a
/// structure is missing a vector it needs.
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Distinguished vectors of a (super)conformal structure.
///
/// Vector names: "nu"; "tau"; "tau+", "tau-", "j"; "tilde_tau+", "tilde_tau-",
/// "j++", "j--"; and "T", "J", "Q", "G" for topological structures.
/// claimed_c is the central charge, or the rank d for a topological structure.
struct StructureSpec {
  StructureKind kind = StructureKind::Virasoro;
  SpaceSpec space;
  std::map<std::string, State> vectors;
  Rational claimed_c;
  std::optional<Twist> twist;  ///< set for topological structures

  const State& at(const std::string& name) const;
};

StructureSpec conformal_boson(const SpaceSpec& space);
StructureSpec conformal_fermion(const SpaceSpec& space);
StructureSpec polarized_fermion_conformal(const SpaceSpec& space, const Rational& lambda);
StructureSpec n1_structure(const SpaceSpec& space);
StructureSpec n2_structure(const SpaceSpec& space);
StructureSpec n4_structure(const SpaceSpec& space);

/// Relation suites, each as the full singular part of every OPE in the
/// relation set plus homogeneity of the vectors.
///
/// The N=2 and N=4 suites use the normalization in which
///   tau-(z)tau+(w) ~ (c/3)/(z-w)^3 - j/(z-w)^2 + (nu - T j/2)/(z-w),
/// which is the one the free-field vectors satisfy and the one the
/// topological twist and the N=1 combination a tau+ + tau-/a require.
/// The literal printed forms of the affected lines are attached as
/// informational checks.
Report verify_virasoro(const StructureSpec& s);
Report verify_n1(const StructureSpec& s);
Report verify_n2(const StructureSpec& s);
Report verify_n4(const StructureSpec& s);
Report verify_topological(const StructureSpec& s);
/// Dispatches on s.kind.
Report verify(const StructureSpec& s);

StructureSpec n1_from_n2(const StructureSpec& s, const Rational& a);
StructureSpec twist(const StructureSpec& s, Twist which);
StructureSpec untwist(const StructureSpec& s, Twist which);

/// Deterministic probe states: `count` monomials spread evenly over the
/// canonical basis of weight <= max_weight2/2.
std::vector<State> probe_basis(const SpaceSpec& space, int max_weight2, std::size_t count);

/// Mode-level relations on probe states: [L_m, L_n], and for the super
/// structures [G_r, G_s], [L_m, G_r], [J_m, J_n], [J_m, G_r], [L_m, J_n]
/// with small mode numbers. Topological structures get Q0^2 = 0 and
/// T_n = [Q_0, G_n].
Report spot_check_modes(const StructureSpec& s, std::span<const State> probes);

/// Component of s with the given doubled weight and charge.
State project(const SpaceSpec& space, const State& s, int weight2, int charge, Grading g = Grading::Untwisted);

}  // namespace scva

#endif  // SCVA_STRUCTURES_HPP
