#ifndef SCVA_RATIONAL_HPP
#define SCVA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace scva {

/// Exact scalar type of the whole engine.
using Rational = mpq_class;
using Integer = mpz_class;

/// Generalized binomial coefficient binom(n, j) for any integer n and j >= 0.
inline Integer binomial(long n, long j) {
  if (j < 0) return 0;
  Integer num = 1;
  Integer den = 1;
  for (long i = 0; i < j; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

/// "p/q" or "p"; never a decimal.
inline std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// p/q in canonical form. mpq_class(p, q) alone does not reduce.
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Rational from a half-integer stored as twice its value.
inline Rational half(long twice) {
  Rational r(twice, 2);
  r.canonicalize();
  return r;
}

}  // namespace scva

#endif  // SCVA_RATIONAL_HPP
