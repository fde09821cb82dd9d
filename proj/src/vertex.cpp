#include "scva/vertex.hpp"

#include <algorithm>
#include <span>
#include <string>

namespace scva {

namespace {

long floor_half(long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

// One factor d^(deriv) u of a monomial's field.
struct Factor {
  Letter letter;
  int gen;
  long deriv;
  int deg2;
  bool odd;
};

std::vector<Factor> factors_of(const SpaceSpec& space, const Monomial& mono) {
  std::vector<Factor> out;
  out.reserve(mono.size());
  for (const auto& m : mono)
    out.push_back(Factor{m.letter, m.gen, -1 - field_index(space, m), -m.idx2, m.fermionic()});
  return out;
}

// (d^(j) u)_(n) = (-1)^j binom(n, j) u_(n-j)
State apply_factor(const SpaceSpec& space, const Factor& f, long n, const State& s) {
  Integer b = binomial(n, f.deriv);
  if (b == 0 || s.is_zero()) return {};
  if (f.deriv % 2 != 0) b = -b;
  State out = apply_mode(space, field_mode(space, f.letter, f.gen, n - f.deriv), s);
  out *= Rational(b);
  return out;
}

State apply_field(const SpaceSpec& space, std::span<const Factor> fs, long n, const State& s) {
  if (s.is_zero()) return {};
  if (fs.empty()) return n == -1 ? s : State{};
  if (fs.size() == 1) return apply_factor(space, fs[0], n, s);

  const Factor& head = fs[0];
  const auto rest = fs.subspan(1);
  int rest_deg2 = 0;
  bool rest_odd = false;
  for (const auto& f : rest) {
    rest_deg2 += f.deg2;
    rest_odd ^= f.odd;
  }
  const int s_deg2 = max_degree2(s);

  State out;
  // sum_{m<0} A_(m) B_(n-m-1) s, with B_(k) s = 0 once deg(B_(k) s) < 0.
  const long kmax = floor_half(rest_deg2 + s_deg2) - 1;
  for (long m = -1; n - m - 1 <= kmax; --m) {
    State inner = apply_field(space, rest, n - m - 1, s);
    if (!inner.is_zero()) out += apply_factor(space, head, m, inner);
  }
  // (-1)^{|A||B|} sum_{m>=0} B_(n-m-1) A_(m) s
  const long mmax = floor_half(head.deg2 + s_deg2) - 1;
  const bool negate = head.odd && rest_odd;
  for (long m = 0; m <= mmax; ++m) {
    State inner = apply_factor(space, head, m, s);
    if (inner.is_zero()) continue;
    State t = apply_field(space, rest, n - m - 1, inner);
    if (negate) {
      out -= t;
    } else {
      out += t;
    }
  }
  return out;
}

int parity_sign(bool a_odd, bool b_odd) { return (a_odd && b_odd) ? -1 : 1; }

}  // namespace

State translate(const SpaceSpec& space, const State& s) {
  State out;
  for (const auto& [mono, c] : s) {
    for (std::size_t i = 0; i < mono.size(); ++i) {
      const long p = field_index(space, mono[i]);
      Monomial modes = mono;
      modes[i] = field_mode(space, mono[i].letter, mono[i].gen, p - 1);
      out += (c * Rational(-p)) * make_state(space, modes);
    }
  }
  return out;
}

State translate_divided(const SpaceSpec& space, const State& s, int k) {
  State cur = s;
  for (int i = 1; i <= k; ++i) {
    cur = translate(space, cur);
    cur *= frac(1, i);
  }
  return cur;
}

State nth_product(const SpaceSpec& space, const State& a, const State& b, long n) {
  State out;
  if (b.is_zero()) return out;
  for (const auto& [mono, c] : a) {
    const auto fs = factors_of(space, mono);
    State t = apply_field(space, fs, n, b);
    t *= c;
    out += t;
  }
  return out;
}

State normally_ordered(const SpaceSpec& space, const State& a, const State& b) { return nth_product(space, a, b, -1); }

long max_product_index(const State& a, const State& b) { return floor_half(max_degree2(a) + max_degree2(b)) - 1; }

OpeSingularPart ope_singular(const SpaceSpec& space, const State& a, const State& b) {
  OpeSingularPart out;
  for (long n = max_product_index(a, b); n >= 0; --n) {
    State c = nth_product(space, a, b, n);
    if (!c.is_zero()) out.push_back(Pole{static_cast<int>(n + 1), std::move(c)});
  }
  return out;
}

State pole_of(const OpeSingularPart& ope, int order) {
  for (const auto& p : ope)
    if (p.order == order) return p.coefficient;
  return {};
}

namespace {

// p sum_{i>=0} (-1)^{n+i+1} T^(i)(b_(n+i) a), for parity-homogeneous a and b.
State skew_rhs(const SpaceSpec& space, const State& a, const State& b, long n, int sign) {
  State out;
  const long top = max_product_index(b, a);
  for (long i = 0; n + i <= top; ++i) {
    State prod = nth_product(space, b, a, n + i);
    if (prod.is_zero()) continue;
    State t = translate_divided(space, prod, static_cast<int>(i));
    if (((n + i + 1) % 2 + 2) % 2 == 1) t *= -1;
    out += t;
  }
  out *= sign;
  return out;
}

}  // namespace

Report skew_symmetry_check(const SpaceSpec& space, const State& a, const State& b, int max_n, SkewOptions opts) {
  Report rep("skew symmetry");
  const State parts_a[2] = {a.even_part(), a.odd_part()};
  const State parts_b[2] = {b.even_part(), b.odd_part()};
  for (long n = -max_n; n <= max_n; ++n) {
    State lhs = nth_product(space, a, b, n);
    State rhs;
    for (int pa = 0; pa < 2; ++pa) {
      for (int pb = 0; pb < 2; ++pb) {
        if (parts_a[pa].is_zero() || parts_b[pb].is_zero()) continue;
        int sign = parity_sign(pa == 1, pb == 1);
        if (opts.flip_fermion_sign && pa == 1 && pb == 1) sign = 1;
        rhs += skew_rhs(space, parts_a[pa], parts_b[pb], n, sign);
      }
    }
    rep.expect("skew.n=" + std::to_string(n), std::move(lhs), std::move(rhs));
  }
  return rep;
}

State bracket_on(const SpaceSpec& space, const State& a, long m, const State& b, long n, const State& probe) {
  const State parts_a[2] = {a.even_part(), a.odd_part()};
  const State parts_b[2] = {b.even_part(), b.odd_part()};
  State out;
  for (int pa = 0; pa < 2; ++pa) {
    for (int pb = 0; pb < 2; ++pb) {
      if (parts_a[pa].is_zero() || parts_b[pb].is_zero()) continue;
      State ab = nth_product(space, parts_a[pa], nth_product(space, parts_b[pb], probe, n), m);
      State ba = nth_product(space, parts_b[pb], nth_product(space, parts_a[pa], probe, m), n);
      out += ab;
      if (pa == 1 && pb == 1) {
        out += ba;
      } else {
        out -= ba;
      }
    }
  }
  return out;
}

Report commutator_check(const SpaceSpec& space, const State& a, const State& b, long m, long n, const State& probe) {
  Report rep("commutator formula");
  State lhs = bracket_on(space, a, m, b, n, probe);
  State rhs;
  for (long j = 0; j <= max_product_index(a, b); ++j) {
    const Integer coeff = binomial(m, j);
    if (coeff == 0) continue;
    State ajb = nth_product(space, a, b, j);
    if (ajb.is_zero()) continue;
    State t = nth_product(space, ajb, probe, m + n - j);
    t *= Rational(coeff);
    rhs += t;
  }
  rep.expect("commutator.m=" + std::to_string(m) + ".n=" + std::to_string(n), std::move(lhs), std::move(rhs));
  return rep;
}

namespace {

void ope_checks(Report& rep, const SpaceSpec& space, const std::string& id, const State& a, const State& b,
                const PoleTable& expected, const std::string& source, const std::string* note) {
  long top = max_product_index(a, b) + 1;
  if (!expected.empty()) top = std::max<long>(top, expected.rbegin()->first);
  for (long k = top; k >= 1; --k) {
    auto it = expected.find(static_cast<int>(k));
    State rhs = it == expected.end() ? State{} : it->second;
    const std::string cid = id + ".pole" + std::to_string(k);
    State lhs = nth_product(space, a, b, k - 1);
    if (note) {
      rep.inform(cid, std::move(lhs), std::move(rhs), source, static_cast<int>(k), *note);
    } else {
      rep.expect(cid, std::move(lhs), std::move(rhs), source, static_cast<int>(k));
    }
  }
}

}  // namespace

void expect_ope(Report& rep, const SpaceSpec& space, const std::string& id, const State& a, const State& b,
                const PoleTable& expected, const std::string& source) {
  ope_checks(rep, space, id, a, b, expected, source, nullptr);
}

void inform_ope(Report& rep, const SpaceSpec& space, const std::string& id, const State& a, const State& b,
                const PoleTable& expected, const std::string& source, const std::string& note) {
  ope_checks(rep, space, id, a, b, expected, source, &note);
}

}  // namespace scva
