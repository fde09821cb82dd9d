#ifndef SCVA_PARSER_HPP
#define SCVA_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "scva/state.hpp"

namespace scva {

/// Malformed state text. offset() is the byte position of the offending token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses whitespace-separated state text:
///
///   state    := term (("+" | "-") term)*
///   term     := [rational] mode* "|0>"
///   mode     := name digits "_" "{" rational "}"
///   rational := ["-"] digits ["/" digits]
///   name     := "a" | "b" | "c" | "phi" | "psi"
///
/// e.g. "1/2 a1_{-1} a1_{-1} |0>". The literal "0" denotes the zero state.
/// Modes are reordered canonically with their fermionic signs.
State parse_state(std::string_view text, const SpaceSpec& space);

/// "p", "-p" or "p/q"; throws ParseError otherwise.
Rational parse_rational(std::string_view text);

/// Canonical text: deterministic term order, coefficients as "p/q",
/// a coefficient of 1 omitted. Zero formats as "0".
std::string format_state(const State& s);
std::string format_mode(const Mode& m);
std::string format_monomial(const Monomial& m);

}  // namespace scva

#endif  // SCVA_PARSER_HPP
