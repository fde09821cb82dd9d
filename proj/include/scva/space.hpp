#ifndef SCVA_SPACE_HPP
#define SCVA_SPACE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace scva {

enum class Sector : std::uint8_t { NS, R };

/// Generator families. The enumerator order is the canonical monomial order:
/// fermions (phi, psi) sort before bosons (a, b, c).
///
///  orthonormal space: a^i (boson), phi^i (fermion), g(e^i, e^j) = delta_ij
///  polarized space:   b^i, c^i (bosons), phi^i, psi^i (fermions) with
///                     g(b^i, c^j) = g(phi^i, psi^j) = delta_ij
enum class Letter : std::uint8_t { Phi = 0, Psi = 1, A = 2, B = 3, C = 4 };

constexpr bool is_fermionic(Letter l) { return l == Letter::Phi || l == Letter::Psi; }

std::string letter_name(Letter l);

/// Thrown for an invalid space or a mode that does not exist in a space.
class SpaceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The finite-dimensional inner-product space T together with the sector and
/// basis conventions of its Fock space.
struct SpaceSpec {
  int dim = 1;
  Sector sector = Sector::NS;
  bool polarized = false;
  bool quaternionic = false;

  /// Number of generators per letter: dim for orthonormal, dim/2 for polarized.
  int rank() const { return polarized ? dim / 2 : dim; }

  bool has_letter(Letter l) const;
  /// The letter g-paired with l (a<->a, phi<->phi; b<->c, phi<->psi).
  Letter partner(Letter l) const;

  bool operator==(const SpaceSpec&) const = default;
};

/// Validates and returns a space; throws SpaceError on violated invariants.
SpaceSpec make_space(int dim, Sector sector, bool polarized, bool quaternionic = false);

std::string describe(const SpaceSpec& s);

}  // namespace scva

#endif  // SCVA_SPACE_HPP
