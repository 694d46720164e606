#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace yangian {

// Exact rational scalar. Always kept in canonical form: gcd(num, den) = 1,
// den > 0. All arithmetic on canonical values stays canonical; the helpers
// below are the only construction paths that need explicit canonicalization.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "p/q" or "-p/q" (ASCII, base 10).
inline Rational rat_parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw std::invalid_argument("rational with zero denominator: " + text);
  q.canonicalize();
  return q;
}

// Canonical rendering: "p" when the denominator is 1, else "p/q".
inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline int rat_sign(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

}  // namespace yangian
