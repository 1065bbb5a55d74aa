#include "qd/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qd {

namespace {

std::vector<unsigned long> prime_factors(unsigned long n) {
  std::vector<unsigned long> ps;
  for (unsigned long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long r = n;
  for (unsigned long p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

using Poly = std::vector<Rational>;  // dense, ascending degree

// Quotient of a by monic b, exact.
Poly poly_div_exact(Poly a, const Poly& b) {
  size_t db = b.size() - 1;
  if (a.size() <= db) throw std::logic_error("cyclotomic polynomial division underflow");
  Poly q(a.size() - db, Rational(0));
  for (size_t i = a.size() - 1; i + 1 > db; --i) {
    Rational f = a[i];
    if (f != 0) {
      q[i - db] = f;
      for (size_t j = 0; j <= db; ++j) a[i - db + j] -= f * b[j];
    }
    if (i == db) break;
  }
  for (const Rational& r : a)
    if (r != 0) throw std::logic_error("cyclotomic polynomial division not exact");
  return q;
}

}  // namespace

// Per-order tables: the N-th cyclotomic polynomial and the reductions of
// zeta^e mod Phi_N for every e in [0, N).
class CycField {
 public:
  unsigned long n;
  unsigned long phi;
  std::vector<std::vector<Rational>> powred;  // [e] -> phi coefficients

  static const CycField& get(unsigned long n);

  // Descent data for one prime divisor: solve lift(y) = c for y in Q(zeta_{n/p}).
  struct Descent {
    unsigned long m;                           // n / p
    unsigned long mphi;
    std::vector<std::vector<Rational>> lift;   // phi(n) x phi(m), column j = zeta_m^j lifted
    std::vector<size_t> pivot_rows;            // mphi independent rows
    std::vector<std::vector<Rational>> inv;    // inverse of the pivot square
  };
  std::vector<Descent> descents;  // one per prime factor of n, ascending

 private:
  explicit CycField(unsigned long order);
};

namespace {
Poly cyclotomic_poly(unsigned long n) {
  // x^n - 1 divided by all lower-order cyclotomic polynomials.
  Poly num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  for (unsigned long d = 1; d < n; ++d)
    if (n % d == 0) {
      Poly phid = cyclotomic_poly(d);
      num = poly_div_exact(std::move(num), phid);
    }
  return num;
}
}  // namespace

CycField::CycField(unsigned long order) : n(order), phi(euler_phi(order)) {
  Poly phin = cyclotomic_poly(n);
  // powred by repeated multiplication by zeta with reduction (Phi_n is monic).
  powred.assign(n, {});
  std::vector<Rational> cur(phi, Rational(0));
  cur[0] = 1;
  powred[0] = cur;
  for (unsigned long e = 1; e < n; ++e) {
    std::vector<Rational> next(phi + 1, Rational(0));
    for (unsigned long j = 0; j < phi; ++j) next[j + 1] = cur[j];
    if (next[phi] != 0) {
      Rational f = next[phi];
      for (unsigned long j = 0; j <= phi; ++j) next[j] -= f * phin[j];
    }
    next.resize(phi);
    cur = next;
    powred[e] = cur;
  }
  for (unsigned long p : prime_factors(n)) {
    Descent d;
    d.m = n / p;
    d.mphi = euler_phi(d.m);
    unsigned long stride = n / d.m;
    d.lift.assign(phi, std::vector<Rational>(d.mphi, Rational(0)));
    for (unsigned long j = 0; j < d.mphi; ++j) {
      const auto& col = powred[(j * stride) % n];
      for (unsigned long r = 0; r < phi; ++r) d.lift[r][j] = col[r];
    }
    // Row-echelon pass to find mphi pivot rows, then invert that square block.
    std::vector<std::vector<Rational>> work = d.lift;
    std::vector<size_t> rows(phi);
    std::iota(rows.begin(), rows.end(), 0);
    size_t rpos = 0;
    for (unsigned long col = 0; col < d.mphi; ++col) {
      size_t sel = rpos;
      while (sel < phi && work[rows[sel]][col] == 0) ++sel;
      if (sel == phi) throw std::logic_error("cyclotomic lift matrix rank-deficient");
      std::swap(rows[rpos], rows[sel]);
      d.pivot_rows.push_back(rows[rpos]);
      const auto& prow = work[rows[rpos]];
      Rational pv = prow[col];
      for (size_t k = rpos + 1; k < phi; ++k) {
        Rational f = work[rows[k]][col] / pv;
        if (f == 0) continue;
        for (unsigned long c2 = col; c2 < d.mphi; ++c2) work[rows[k]][c2] -= f * prow[c2];
      }
      ++rpos;
    }
    // invert the mphi x mphi pivot submatrix by Gauss-Jordan
    unsigned long m = d.mphi;
    std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(2 * m, Rational(0)));
    for (unsigned long r = 0; r < m; ++r) {
      for (unsigned long c = 0; c < m; ++c) aug[r][c] = d.lift[d.pivot_rows[r]][c];
      aug[r][m + r] = 1;
    }
    for (unsigned long col = 0; col < m; ++col) {
      unsigned long sel = col;
      while (aug[sel][col] == 0) ++sel;
      std::swap(aug[col], aug[sel]);
      Rational pv = aug[col][col];
      for (auto& x : aug[col]) x /= pv;
      for (unsigned long r = 0; r < m; ++r)
        if (r != col && aug[r][col] != 0) {
          Rational f = aug[r][col];
          for (unsigned long c2 = 0; c2 < 2 * m; ++c2) aug[r][c2] -= f * aug[col][c2];
        }
    }
    d.inv.assign(m, std::vector<Rational>(m));
    for (unsigned long r = 0; r < m; ++r)
      for (unsigned long c = 0; c < m; ++c) d.inv[r][c] = aug[r][m + c];
    descents.push_back(std::move(d));
  }
}

const CycField& CycField::get(unsigned long n) {
  static std::mutex mu;
  static std::map<unsigned long, std::unique_ptr<CycField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::unique_ptr<CycField>(new CycField(n))).first;
  return *it->second;
}

Cyclotomic Cyclotomic::root(unsigned long n, long k) {
  if (n == 0) throw std::invalid_argument("cyc_root: order must be positive");
  long kk = k % static_cast<long>(n);
  if (kk < 0) kk += static_cast<long>(n);
  if (n == 1) return Cyclotomic(1);
  const CycField& F = CycField::get(n);
  return Cyclotomic(n, F.powred[static_cast<unsigned long>(kk)]);
}

const Rational& Cyclotomic::rational_value() const {
  if (n_ != 1) throw std::domain_error("not a rational value: " + str());
  return c_[0];
}

std::vector<Rational> Cyclotomic::lift_to(unsigned long big_n) const {
  const CycField& F = CycField::get(big_n);
  std::vector<Rational> out(F.phi, Rational(0));
  unsigned long stride = big_n / n_;
  for (unsigned long j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const auto& v = F.powred[(j * stride) % big_n];
    for (unsigned long r = 0; r < F.phi; ++r) out[r] += c_[j] * v[r];
  }
  return out;
}

void Cyclotomic::reduce() {
  for (;;) {
    bool all_zero = true;
    for (const Rational& x : c_)
      if (x != 0) { all_zero = false; break; }
    if (all_zero) {
      n_ = 1;
      c_.assign(1, Rational(0));
      return;
    }
    if (n_ == 1) return;
    const CycField& F = CycField::get(n_);
    bool descended = false;
    for (const auto& d : F.descents) {
      std::vector<Rational> y(d.mphi, Rational(0));
      for (unsigned long r = 0; r < d.mphi; ++r)
        for (unsigned long c = 0; c < d.mphi; ++c) y[r] += d.inv[r][c] * c_[d.pivot_rows[c]];
      bool ok = true;
      for (unsigned long r = 0; r < F.phi && ok; ++r) {
        Rational acc(0);
        for (unsigned long c = 0; c < d.mphi; ++c)
          if (y[c] != 0) acc += d.lift[r][c] * y[c];
        if (acc != c_[r]) ok = false;
      }
      if (ok) {
        n_ = d.m;
        c_ = std::move(y);
        descended = true;
        break;
      }
    }
    if (!descended) return;
  }
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (Rational& x : r.c_) x = -x;
  return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  unsigned long n = std::lcm(a.n_, b.n_);
  if (n == 1) return Cyclotomic(a.c_[0] + b.c_[0]);
  std::vector<Rational> ca = a.lift_to(n), cb = b.lift_to(n);
  for (size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
  return Cyclotomic(n, std::move(ca));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero() || b.is_zero()) return Cyclotomic();
  unsigned long n = std::lcm(a.n_, b.n_);
  if (n == 1) return Cyclotomic(a.c_[0] * b.c_[0]);
  const CycField& F = CycField::get(n);
  std::vector<Rational> ca = a.lift_to(n), cb = b.lift_to(n);
  std::vector<Rational> raw(2 * F.phi, Rational(0));
  for (unsigned long i = 0; i < F.phi; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned long j = 0; j < F.phi; ++j) {
      if (cb[j] == 0) continue;
      raw[i + j] += ca[i] * cb[j];
    }
  }
  std::vector<Rational> out(F.phi, Rational(0));
  for (unsigned long e = 0; e < raw.size(); ++e) {
    if (raw[e] == 0) continue;
    if (e < F.phi) {
      out[e] += raw[e];
    } else {
      const auto& v = F.powred[e % n];
      for (unsigned long r = 0; r < F.phi; ++r) out[r] += raw[e] * v[r];
    }
  }
  return Cyclotomic(n, std::move(out));
}

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta_N)");
  if (n_ == 1) return Cyclotomic(Rational(1) / c_[0]);
  const CycField& F = CycField::get(n_);
  unsigned long m = F.phi;
  // Multiplication-by-*this matrix, column j = this * zeta^j, solved against e0.
  std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(m + 1, Rational(0)));
  std::vector<Rational> col = c_;
  for (unsigned long j = 0; j < m; ++j) {
    for (unsigned long r = 0; r < m; ++r) aug[r][j] = col[r];
    if (j + 1 < m) {
      std::vector<Rational> next(m, Rational(0));
      Rational top = col[m - 1];
      for (unsigned long r = m - 1; r >= 1; --r) next[r] = col[r - 1];
      if (top != 0) {
        const auto& v = F.powred[F.phi % n_];
        for (unsigned long r = 0; r < m; ++r) next[r] += top * v[r];
      }
      col = next;
    }
  }
  aug[0][m] = 1;
  for (unsigned long cpos = 0; cpos < m; ++cpos) {
    unsigned long sel = cpos;
    while (sel < m && aug[sel][cpos] == 0) ++sel;
    if (sel == m) throw std::logic_error("singular multiplication matrix in Q(zeta_N)");
    std::swap(aug[cpos], aug[sel]);
    Rational pv = aug[cpos][cpos];
    for (auto& x : aug[cpos]) x /= pv;
    for (unsigned long r = 0; r < m; ++r)
      if (r != cpos && aug[r][cpos] != 0) {
        Rational f = aug[r][cpos];
        for (unsigned long c2 = cpos; c2 <= m; ++c2) aug[r][c2] -= f * aug[cpos][c2];
      }
  }
  std::vector<Rational> y(m);
  for (unsigned long r = 0; r < m; ++r) y[r] = aug[r][m];
  return Cyclotomic(n_, std::move(y));
}

Cyclotomic Cyclotomic::conj() const {
  if (n_ == 1) return *this;
  const CycField& F = CycField::get(n_);
  std::vector<Rational> out(F.phi, Rational(0));
  for (unsigned long k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const auto& v = F.powred[(n_ - k) % n_];
    for (unsigned long r = 0; r < F.phi; ++r) out[r] += c_[k] * v[r];
  }
  return Cyclotomic(n_, std::move(out));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Cyclotomic acc(1), base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string Cyclotomic::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (unsigned long k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rational a = c_[k];
    bool neg = a < 0;
    if (neg) a = -a;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mag = rat_str(a);
    if (k == 0) {
      out += mag;
    } else {
      if (a != 1) out += mag + "*";
      out += "z(" + std::to_string(n_) + ")^" + std::to_string(k);
    }
  }
  return out;
}

namespace {

struct ScalarParser {
  const std::string& s;
  size_t pos = 0;
  explicit ScalarParser(const std::string& str) : s(str) {}

  void skip() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + why);
  }

  Cyclotomic expr() {
    Cyclotomic acc = eat('-') ? -term() : term();
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }
  Cyclotomic term() {
    Cyclotomic acc = factor();
    for (;;) {
      skip();
      if (eat('*')) acc *= factor();
      else if (eat('/')) acc = acc / factor();
      else break;
    }
    return acc;
  }
  Cyclotomic factor() {
    Cyclotomic base = atom();
    skip();
    if (eat('^')) {
      bool neg = eat('-');
      long e = integer();
      base = base.pow(neg ? -e : e);
    }
    return base;
  }
  long integer() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    return std::stol(s.substr(start, pos - start));
  }
  Cyclotomic atom() {
    skip();
    if (pos >= s.size()) fail("unexpected end of input");
    if (eat('(')) {
      Cyclotomic v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (s[pos] == 'z') {
      ++pos;
      if (!eat('(')) fail("expected '(' after z");
      long n = integer();
      if (!eat(')')) fail("expected ')'");
      if (n <= 0) fail("z(N) needs N >= 1");
      return Cyclotomic::root(static_cast<unsigned long>(n), 1);
    }
    if (s[pos] == 'i' && (pos + 1 == s.size() || !std::isalnum(static_cast<unsigned char>(s[pos + 1])))) {
      ++pos;
      return Cyclotomic::imag();
    }
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      long v = integer();
      return Cyclotomic(Rational(v));
    }
    fail("unexpected character");
  }
};

}  // namespace

Cyclotomic Cyclotomic::parse(const std::string& s) {
  ScalarParser p(s);
  Cyclotomic v = p.expr();
  p.skip();
  if (p.pos != s.size()) p.fail("trailing input");
  return v;
}

}  // namespace qd
