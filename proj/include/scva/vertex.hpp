#ifndef SCVA_VERTEX_HPP
#define SCVA_VERTEX_HPP

#include <map>
#include <string>
#include <vector>

#include "scva/fock.hpp"
#include "scva/report.hpp"

namespace scva {

/// Coefficient of (z-w)^{-order} in Y(a,z)Y(b,w), i.e. a_(order-1) b.
struct Pole {
  int order = 1;
  State coefficient;
};

/// Nonzero poles only, in descending order.
using OpeSingularPart = std::vector<Pole>;

/// The translation operator T (= L_{-1}), a derivation sending the creation
/// mode u_(p) to -p u_(p-1).
State translate(const SpaceSpec& space, const State& s);
/// Divided power T^k / k!.
State translate_divided(const SpaceSpec& space, const State& s, int k);

/// a_(n) b. Y(a, z) of a monomial is the nested normally ordered product
/// :d^(j1)u1 (:d^(j2)u2 (...):): of divided derivatives of generator fields;
/// the n-th mode is extracted with
///   :AB:_(n) = sum_{m<0} A_(m) B_(n-m-1) + (-1)^{|A||B|} sum_{m>=0} B_(n-m-1) A_(m).
State nth_product(const SpaceSpec& space, const State& a, const State& b, long n);

/// a_(-1) b.
State normally_ordered(const SpaceSpec& space, const State& a, const State& b);

/// Largest n for which a_(n) b can be nonzero, from the degree bound.
long max_product_index(const State& a, const State& b);

OpeSingularPart ope_singular(const SpaceSpec& space, const State& a, const State& b);

/// The coefficient of (z-w)^{-order} in an OPE singular part (zero if absent).
State pole_of(const OpeSingularPart& ope, int order);

struct SkewOptions {
  /// Negative control: use +1 instead of -1 for the odd-odd Koszul factor.
  bool flip_fermion_sign = false;
};

/// Checks a_(n) b = p sum_{i>=0} (-1)^{n+i+1} T^(i) (b_(n+i) a) for |n| <= max_n,
/// where p = (-1)^{|a||b|}.
Report skew_symmetry_check(const SpaceSpec& space, const State& a, const State& b, int max_n,
                           SkewOptions opts = {});

/// Checks [a_(m), b_(n)] probe = sum_{j>=0} binom(m, j) (a_(j) b)_(m+n-j) probe.
Report commutator_check(const SpaceSpec& space, const State& a, const State& b, long m, long n,
                        const State& probe);

/// Supercommutator [a_(m), b_(n)] applied to probe, computed directly.
State bracket_on(const SpaceSpec& space, const State& a, long m, const State& b, long n, const State& probe);

/// Expected singular part of a(z)b(w), keyed by pole order. Orders not listed
/// are expected to vanish.
using PoleTable = std::map<int, State>;

/// Records one check per pole order k >= 1 up to the larger of the degree
/// bound and the table, with ids "<id>.pole<k>".
void expect_ope(Report& rep, const SpaceSpec& space, const std::string& id, const State& a, const State& b,
                const PoleTable& expected, const std::string& source = "paper");
/// Same checks recorded as informational (they never fail the report).
void inform_ope(Report& rep, const SpaceSpec& space, const std::string& id, const State& a, const State& b,
                const PoleTable& expected, const std::string& source, const std::string& note);

}  // namespace scva

#endif  // SCVA_VERTEX_HPP
