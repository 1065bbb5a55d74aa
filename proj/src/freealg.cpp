#include "qd/freealg.hpp"

#include <cctype>
#include <stdexcept>

namespace qd {

bool NcPoly::is_homogeneous() const {
  if (terms.empty()) return true;
  size_t d = terms.begin()->first.size();
  for (const auto& [w, c] : terms)
    if (w.size() != d) return false;
  return true;
}

NcPoly NcPoly::operator-() const {
  NcPoly out;
  for (const auto& [w, c] : terms) out.terms.emplace(w, -c);
  return out;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms) poly_add_term(*this, w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms) poly_add_term(*this, w, -c);
  return *this;
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
  NcPoly out = *this;
  out += o;
  return out;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
  NcPoly out = *this;
  out -= o;
  return out;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
  NcPoly out;
  for (const auto& [w1, c1] : terms)
    for (const auto& [w2, c2] : o.terms) poly_add_term(out, w1 + w2, c1 * c2);
  return out;
}

NcPoly NcPoly::scaled(const Cyclotomic& c) const {
  NcPoly out;
  if (c.is_zero()) return out;
  for (const auto& [w, cc] : terms) out.terms.emplace(w, cc * c);
  return out;
}

Cyclotomic NcPoly::coeff(const Word& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? Cyclotomic(0) : it->second;
}

void poly_add_term(NcPoly& p, const Word& w, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = p.terms.find(w);
  if (it == p.terms.end()) {
    p.terms.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) p.terms.erase(it);
  }
}

NcPoly poly_term(Word w, Cyclotomic c) {
  NcPoly p;
  poly_add_term(p, w, c);
  return p;
}

NcPoly poly_const(Cyclotomic c) { return poly_term(Word{}, std::move(c)); }

NcPoly sandwich(const Word& u, const NcPoly& p, const Word& v) {
  NcPoly out;
  for (const auto& [w, c] : p.terms) out.terms.emplace(u + w + v, c);
  return out;
}

std::string word_str(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size();) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += names.at(static_cast<unsigned char>(w[i]));
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace {

// Coefficient prefix such as "", "3*", "(1/2)*", "z(8)^1*", "(1/2)*z(8)^3*",
// "(1 + i)*"; assumes any overall sign was already extracted.
std::string coeff_prefix(const Cyclotomic& a) {
  if (a == Cyclotomic(1)) return "";
  auto wrap = [](const std::string& s) {
    return s.find('/') != std::string::npos ? "(" + s + ")" : s;
  };
  if (a.is_rational()) return wrap(rat_str(a.rational_value())) + "*";
  size_t nonzero = 0, expo = 0;
  for (size_t k = 0; k < a.coeffs().size(); ++k)
    if (a.coeffs()[k] != 0) {
      ++nonzero;
      expo = k;
    }
  if (nonzero == 1) {
    const Rational& q = a.coeffs()[expo];
    std::string root = "z(" + std::to_string(a.order()) + ")^" + std::to_string(expo);
    return (q == 1 ? root : wrap(rat_str(q)) + "*" + root) + "*";
  }
  return "(" + a.str() + ")*";
}

// Negative iff a rational or single-term cyclotomic has a negative coefficient.
bool extractable_minus(const Cyclotomic& a) {
  if (a.is_rational()) return a.rational_value() < 0;
  size_t nonzero = 0;
  bool neg = false;
  for (const Rational& q : a.coeffs())
    if (q != 0) {
      ++nonzero;
      neg = q < 0;
    }
  return nonzero == 1 && neg;
}

}  // namespace

std::string poly_str(const NcPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms) {
    Cyclotomic a = c;
    bool neg = extractable_minus(a);
    if (neg) a = -a;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (w.empty()) {
      std::string pre = coeff_prefix(a);
      if (pre.empty()) out += "1";
      else out += pre.substr(0, pre.size() - 1);
    } else {
      out += coeff_prefix(a) + word_str(w, names);
    }
  }
  return out;
}

namespace {

struct PolyParser {
  const std::string& s;
  const std::vector<std::string>& names;
  size_t pos = 0;

  PolyParser(const std::string& str, const std::vector<std::string>& nm) : s(str), names(nm) {}

  void skip() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("poly parse error at " + std::to_string(pos) + ": " + why);
  }

  NcPoly expr() {
    NcPoly acc = eat('-') ? -term() : term();
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }
  NcPoly term() {
    NcPoly acc = factor();
    for (;;) {
      skip();
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        NcPoly d = factor();
        if (d.terms.size() != 1 || !d.terms.begin()->first.empty()) fail("division by a non-scalar");
        acc = acc.scaled(d.terms.begin()->second.inv());
      } else {
        break;
      }
    }
    return acc;
  }
  long integer() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    return std::stol(s.substr(start, pos - start));
  }
  NcPoly factor() {
    NcPoly base = atom();
    skip();
    if (eat('^')) {
      bool neg = eat('-');
      long e = integer();
      if (neg) {
        if (base.terms.size() != 1 || !base.terms.begin()->first.empty()) fail("negative power of a non-scalar");
        return poly_const(base.terms.begin()->second.pow(-e));
      }
      NcPoly acc = poly_const(Cyclotomic(1));
      for (long k = 0; k < e; ++k) acc = acc * base;
      return acc;
    }
    return base;
  }
  NcPoly atom() {
    skip();
    if (pos >= s.size()) fail("unexpected end of input");
    if (eat('(')) {
      NcPoly v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) return poly_const(Cyclotomic(Rational(integer())));
    // identifier: "z(" always begins a root of unity, then generator names, then i
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '\'')) ++pos;
      std::string ident = s.substr(start, pos - start);
      if (ident == "z" && pos < s.size() && s[pos] == '(') {
        ++pos;
        long n = integer();
        if (!eat(')')) fail("expected ')'");
        if (n <= 0) fail("z(N) needs N >= 1");
        return poly_const(Cyclotomic::root(static_cast<unsigned long>(n), 1));
      }
      for (size_t g = 0; g < names.size(); ++g)
        if (names[g] == ident) return poly_term(Word(1, static_cast<char>(g)));
      if (ident == "i") return poly_const(Cyclotomic::imag());
      fail("unknown identifier: " + ident);
    }
    fail("unexpected character");
  }
};

}  // namespace

NcPoly poly_parse(const std::string& s, const std::vector<std::string>& names) {
  PolyParser p(s, names);
  NcPoly v = p.expr();
  p.skip();
  if (p.pos != s.size()) p.fail("trailing input");
  return v;
}

}  // namespace qd
