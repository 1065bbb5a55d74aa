#pragma once

#include "qd/cyclotomic.hpp"

#include <map>
#include <string>
#include <vector>

namespace qd {

/// Word in a free associative algebra; each char is a generator index, with
/// index 0 the largest generator in the term order.
using Word = std::string;

/// Graded lexicographic order, largest first: longer words first, ties broken
/// so that words beginning with smaller indices (larger letters) come first.
struct DeglexGreater {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  }
};

inline bool deglex_less(const Word& a, const Word& b) { return DeglexGreater{}(b, a); }

/// Noncommutative polynomial over Cyclotomic; no zero coefficients stored,
/// terms iterate in decreasing term order (begin() is the lead term).
struct NcPoly {
  std::map<Word, Cyclotomic, DeglexGreater> terms;

  bool is_zero() const { return terms.empty(); }
  const Word& lead_word() const { return terms.begin()->first; }
  const Cyclotomic& lead_coeff() const { return terms.begin()->second; }
  /// Degree of the lead term; -1 for the zero polynomial.
  int degree() const { return is_zero() ? -1 : static_cast<int>(lead_word().size()); }
  bool is_homogeneous() const;

  NcPoly operator-() const;
  NcPoly operator+(const NcPoly&) const;
  NcPoly operator-(const NcPoly&) const;
  NcPoly operator*(const NcPoly&) const;
  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  bool operator==(const NcPoly&) const = default;

  NcPoly scaled(const Cyclotomic& c) const;
  Cyclotomic coeff(const Word& w) const;
};

void poly_add_term(NcPoly& p, const Word& w, const Cyclotomic& c);
NcPoly poly_term(Word w, Cyclotomic c = Cyclotomic(1));
NcPoly poly_const(Cyclotomic c);

/// u * p * v for words u, v.
NcPoly sandwich(const Word& u, const NcPoly& p, const Word& v);

std::string word_str(const Word& w, const std::vector<std::string>& names);
std::string poly_str(const NcPoly& p, const std::vector<std::string>& names);

/// Parses sums of products of scalars and named generators, e.g.
/// "x1*y2 - (1/2)*z(8)^1*y2*x1".  Scalars follow the Cyclotomic grammar.
NcPoly poly_parse(const std::string& s, const std::vector<std::string>& names);

}  // namespace qd
