#include "scva/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "scva/fock.hpp"

namespace scva {

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    out.push_back({s.substr(i, j - i), i});
    i = j;
  }
  return out;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::optional<Rational> read_rational(std::string_view s) {
  bool neg = false;
  if (!s.empty() && s.front() == '-') {
    neg = true;
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  const Integer n{std::string(num)};
  const Integer d{std::string(den)};
  if (d == 0) return std::nullopt;
  Rational r(n, d);
  r.canonicalize();
  if (neg) r = -r;
  return r;
}

bool looks_like_rational(std::string_view s) {
  return !s.empty() && (std::isdigit(static_cast<unsigned char>(s.front())) || (s.front() == '-' && s.size() > 1));
}

Mode parse_mode(const Token& tok, const SpaceSpec& space) {
  std::string_view s = tok.text;
  std::optional<Letter> letter;
  std::size_t name_len = 0;
  for (auto [name, l] : {std::pair{"phi", Letter::Phi}, {"psi", Letter::Psi}, {"a", Letter::A}, {"b", Letter::B},
                         {"c", Letter::C}}) {
    const std::string_view n(name);
    if (s.substr(0, n.size()) == n) {
      letter = l;
      name_len = n.size();
      break;
    }
  }
  if (!letter) throw ParseError("unknown mode name '" + std::string(s) + "'", tok.offset);
  s.remove_prefix(name_len);
  const auto underscore = s.find('_');
  const std::string_view digits = s.substr(0, underscore);
  if (!all_digits(digits)) throw ParseError("expected generator digits in '" + std::string(tok.text) + "'", tok.offset);
  if (underscore == std::string_view::npos || s.size() < underscore + 3 || s[underscore + 1] != '{' ||
      s.back() != '}')
    throw ParseError("expected braced mode index in '" + std::string(tok.text) + "'", tok.offset);
  const auto index = read_rational(s.substr(underscore + 2, s.size() - underscore - 3));
  const std::size_t index_offset = tok.offset + name_len + underscore + 2;
  if (!index) throw ParseError("malformed rational mode index", index_offset);
  const Rational twice = 2 * *index;
  if (twice.get_den() != 1) throw ParseError("mode index must be a half-integer", index_offset);

  Mode m{*letter, std::stoi(std::string(digits)), static_cast<int>(twice.get_num().get_si())};
  try {
    validate_mode(space, m);
  } catch (const SpaceError& e) {
    throw ParseError(e.what(), tok.offset);
  }
  if (!is_creation(space, m)) throw ParseError("annihilation mode in a ket", tok.offset);
  return m;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto r = read_rational(text);
  if (!r) throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  return *r;
}

State parse_state(std::string_view text, const SpaceSpec& space) {
  const auto toks = tokenize(text);
  if (toks.empty()) throw ParseError("empty state expression", 0);
  if (toks.size() == 1 && toks[0].text == "0") return {};

  State out;
  std::size_t i = 0;
  Rational sign = 1;
  while (true) {
    Rational coeff = sign;
    if (i < toks.size() && looks_like_rational(toks[i].text)) {
      const auto r = read_rational(toks[i].text);
      if (!r) throw ParseError("malformed rational '" + std::string(toks[i].text) + "'", toks[i].offset);
      coeff *= *r;
      ++i;
    }
    std::vector<Mode> modes;
    while (i < toks.size() && toks[i].text != "|0>") {
      if (toks[i].text == "+" || toks[i].text == "-") throw ParseError("term is missing '|0>'", toks[i].offset);
      modes.push_back(parse_mode(toks[i], space));
      ++i;
    }
    if (i == toks.size()) throw ParseError("term is missing '|0>'", text.size());
    ++i;
    out += make_state(space, modes, coeff);
    if (i == toks.size()) break;
    if (toks[i].text == "+") {
      sign = 1;
    } else if (toks[i].text == "-") {
      sign = -1;
    } else {
      throw ParseError("expected '+' or '-' between terms", toks[i].offset);
    }
    ++i;
    if (i == toks.size()) throw ParseError("dangling operator", toks[i - 1].offset);
  }
  return out;
}

std::string format_mode(const Mode& m) {
  return letter_name(m.letter) + std::to_string(m.gen) + "_{" + to_string(m.index()) + "}";
}

std::string format_monomial(const Monomial& m) {
  std::string out;
  for (const auto& x : m) out += format_mode(x) + " ";
  return out + "|0>";
}

std::string format_state(const State& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : s) {
    const std::string body = format_monomial(m);
    if (first) {
      out += c == 1 ? body : to_string(c) + " " + body;
      first = false;
      continue;
    }
    out += c < 0 ? " - " : " + ";
    const Rational mag = abs(c);
    out += mag == 1 ? body : to_string(mag) + " " + body;
  }
  return out;
}

}  // namespace scva
