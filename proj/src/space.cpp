#include "scva/space.hpp"

namespace scva {

std::string letter_name(Letter l) {
  switch (l) {
    case Letter::Phi: return "phi";
    case Letter::Psi: return "psi";
    case Letter::A: return "a";
    case Letter::B: return "b";
    case Letter::C: return "c";
  }
  return "?";
}

bool SpaceSpec::has_letter(Letter l) const {
  if (polarized) return l != Letter::A;
  return l == Letter::A || l == Letter::Phi;
}

Letter SpaceSpec::partner(Letter l) const {
  if (!polarized) return l;
  switch (l) {
    case Letter::B: return Letter::C;
    case Letter::C: return Letter::B;
    case Letter::Phi: return Letter::Psi;
    case Letter::Psi: return Letter::Phi;
    case Letter::A: break;
  }
  throw SpaceError("letter a does not exist in a polarized space");
}

SpaceSpec make_space(int dim, Sector sector, bool polarized, bool quaternionic) {
  if (dim < 1) throw SpaceError("dim must be positive");
  if (polarized && dim % 2 != 0) throw SpaceError("polarized space requires even dim");
  if (quaternionic && !polarized) throw SpaceError("quaternionic space requires polarization");
  if (quaternionic && dim % 4 != 0) throw SpaceError("quaternionic space requires dim divisible by 4");
  if (sector == Sector::R && !polarized) throw SpaceError("R requires polarization");
  return SpaceSpec{dim, sector, polarized, quaternionic};
}

std::string describe(const SpaceSpec& s) {
  std::string out = "dim=" + std::to_string(s.dim);
  out += s.sector == Sector::NS ? " NS" : " R";
  if (s.quaternionic) {
    out += " quaternionic";
  } else if (s.polarized) {
    out += " polarized";
  } else {
    out += " orthonormal";
  }
  return out;
}

}  // namespace scva
