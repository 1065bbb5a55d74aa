#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace qd {

// Exact rational scalar. mpq_class keeps den > 0 and gcd(|num|, den) = 1
// after canonicalize(), which every constructor below guarantees.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat_parse(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline bool rat_is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace qd
