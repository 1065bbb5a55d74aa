#pragma once

#include "qd/rational.hpp"

#include <string>
#include <vector>

namespace qd {

/// Exact element of a cyclotomic field Q(zeta_N).
///
/// Canonical form: coefficients on the power basis zeta_N^0..zeta_N^{phi(N)-1}
/// reduced modulo the N-th cyclotomic polynomial, with N the conductor (the
/// minimal order containing the value; rationals have N = 1).  Two values are
/// equal iff their canonical forms are identical, so operator== is decidable
/// equality.  Values are immutable after construction and all operations are
/// pure; the shared per-order tables behind them are mutex-guarded.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_{Rational(0)} {}
  Cyclotomic(const Rational& r) : n_(1), c_{r} {}
  Cyclotomic(long v) : n_(1), c_{Rational(v)} {}
  Cyclotomic(int v) : n_(1), c_{Rational(v)} {}

  /// zeta_N^k in canonical form.  N = 0 is rejected.
  static Cyclotomic root(unsigned long n, long k = 1);
  /// i = zeta_4.
  static Cyclotomic imag() { return root(4, 1); }

  unsigned long order() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const { return n_ == 1 && c_[0] == 0; }
  bool is_rational() const { return n_ == 1; }
  const Rational& rational_value() const;
  bool is_integer() const { return n_ == 1 && rat_is_integer(c_[0]); }

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { *this = *this + o; return *this; }
  Cyclotomic& operator-=(const Cyclotomic& o) { *this = *this - o; return *this; }
  Cyclotomic& operator*=(const Cyclotomic& o) { *this = *this * o; return *this; }

  friend Cyclotomic operator+(const Cyclotomic&, const Cyclotomic&);
  friend Cyclotomic operator-(const Cyclotomic&, const Cyclotomic&);
  friend Cyclotomic operator*(const Cyclotomic&, const Cyclotomic&);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inv(); }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Cyclotomic inv() const;
  /// Complex conjugation, zeta_N -> zeta_N^{-1}.  An involution.
  Cyclotomic conj() const;
  Cyclotomic pow(long e) const;

  bool operator==(const Cyclotomic& o) const { return n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// Rendering "a0 + a1*z(N)^1 + ..." with exact rationals.
  std::string str() const;
  /// Parses the same grammar (plus "i" as an alias for z(4)^1).
  static Cyclotomic parse(const std::string& s);

 private:
  unsigned long n_;
  std::vector<Rational> c_;

  Cyclotomic(unsigned long n, std::vector<Rational> c) : n_(n), c_(std::move(c)) { reduce(); }
  std::vector<Rational> lift_to(unsigned long big_n) const;
  void reduce();

  friend class CycField;
};

}  // namespace qd
