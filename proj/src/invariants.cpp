#include "qd/invariants.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace qd {

int expo_degree(const Expo& a) {
  int d = 0;
  for (int v : a) d += v;
  return d;
}

Word expo_word(const Expo& a) {
  Word w;
  for (int k = 0; k < 6; ++k)
    for (int t = 0; t < a[k]; ++t) w.push_back(static_cast<char>(k));
  return w;
}

void exp_add(ExpPoly& p, const Expo& a, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = p.find(a);
  if (it == p.end()) {
    p.emplace(a, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

Expo expo_act_r(const Expo& a) { return {a[1], a[0], a[3], a[2], a[5], a[4]}; }
Expo expo_act_s(const Expo& a) { return {a[0], a[1], a[3], a[2], a[5], a[4]}; }
Expo expo_act_rs(const Expo& a) { return {a[1], a[0], a[2], a[3], a[4], a[5]}; }

bool in_X(const Expo& a) {
  if (a[0] < a[1] || a[2] < a[3]) return false;
  if ((a[0] + a[1]) % 2 || (a[2] + a[3]) % 2 || (a[4] + a[5]) % 2) return false;
  int lhs = a[0] - a[1], rhs = a[2] - a[3] + a[4] - a[5];
  return ((lhs - rhs) % 4 + 4) % 4 == 0;
}

bool ExpSpan::insert(ExpPoly v) {
  while (!v.empty()) {
    const Expo& lead = v.begin()->first;
    auto it = rows_.find(lead);
    if (it == rows_.end()) {
      Cyclotomic inv = v.begin()->second.inv();
      ExpPoly monic;
      for (const auto& [e, c] : v) monic.emplace(e, c * inv);
      rows_.emplace(lead, std::move(monic));
      return true;
    }
    Cyclotomic f = v.begin()->second;
    for (const auto& [e, c] : it->second) exp_add(v, e, -(f * c));
  }
  return false;
}

bool ExpSpan::contains(ExpPoly v) const {
  while (!v.empty()) {
    auto it = rows_.find(v.begin()->first);
    if (it == rows_.end()) return false;
    Cyclotomic f = v.begin()->second;
    for (const auto& [e, c] : it->second) exp_add(v, e, -(f * c));
  }
  return true;
}

InvariantEngine::InvariantEngine(const FamilyParams& params)
    : params_(params), pres_(d4_algebra(params)) {
  gb_ = groebner(pres_, 4);
  rules_ = MonomialRules::from_gb(gb_, 6);
  if (!rules_)
    throw std::logic_error("D4 relations did not reduce to two-term rewrites");
  const FiniteGroup& G = group();
  subst_.resize(G.order());
  for (int g = 0; g < G.order(); ++g) {
    Mat M = pres_.action->degree1_matrix(g);
    for (int a = 0; a < 6; ++a) {
      int image = -1;
      for (int b = 0; b < 6; ++b)
        if (!M[a][b].is_zero()) {
          if (image >= 0) throw std::logic_error("group action is not monomial on generators");
          image = b;
        }
      subst_[g][a] = {image, M[a][image]};
    }
  }
}

int InvariantEngine::monomial_grade(const Expo& a) const {
  const FiniteGroup& G = group();
  int g = G.id();
  for (int k = 0; k < 6; ++k)
    for (int t = 0; t < a[k]; ++t) g = G.mul(g, pres_.gen_grade[k]);
  return g;
}

Cyclotomic InvariantEngine::pbw_scale(const Expo& e) const {
  auto it = pbw_scale_cache_.find(e);
  if (it != pbw_scale_cache_.end()) return it->second;
  Cyclotomic s = rules_->nf(expo_word(e)).first;
  pbw_scale_cache_.emplace(e, s);
  return s;
}

// The normal word of x^e swaps the two x-letters when the monomial has odd
// y- and z-degree, so recovering the PBW exponent from a normal word needs a
// matching step, not just letter counts.
std::pair<Cyclotomic, Expo> InvariantEngine::normal_to_pbw(const Cyclotomic& c,
                                                           const Word& nw) const {
  Expo e{};
  for (char ch : nw) e[static_cast<unsigned char>(ch)] += 1;
  if (rules_->nf(expo_word(e)).second != nw) {
    std::swap(e[0], e[1]);
    if (rules_->nf(expo_word(e)).second != nw)
      throw std::logic_error("normal word does not come from a PBW monomial");
  }
  return {c / pbw_scale(e), e};
}

std::pair<Cyclotomic, Expo> InvariantEngine::mono_mul(const Expo& a, const Expo& b) const {
  // x^a x^b as a word, reduced, then rewritten on the PBW monomial x^c
  Word w = expo_word(a) + expo_word(b);
  auto [scale, nw] = rules_->nf(std::move(w));
  auto [c, out] = normal_to_pbw(scale, nw);
  return {c, out};
}

ExpPoly InvariantEngine::mul(const ExpPoly& f, const ExpPoly& g) const {
  ExpPoly out;
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g) {
      auto [scale, e] = mono_mul(a, b);
      exp_add(out, e, ca * cb * scale);
    }
  return out;
}

ExpPoly InvariantEngine::mul_scalar(const ExpPoly& f, const Cyclotomic& c) const {
  ExpPoly out;
  if (c.is_zero()) return out;
  for (const auto& [e, v] : f) out.emplace(e, v * c);
  return out;
}

ExpPoly InvariantEngine::pow(const ExpPoly& f, int e) const {
  ExpPoly acc;
  acc.emplace(Expo{}, Cyclotomic(1));
  for (int k = 0; k < e; ++k) acc = mul(acc, f);
  return acc;
}

ExpPoly InvariantEngine::act_monomial(const Expo& a, int g) const {
  // substitute each letter, then sort
  Word w;
  Cyclotomic scale(1);
  for (int k = 0; k < 6; ++k)
    for (int t = 0; t < a[k]; ++t) {
      const auto& [img, c] = subst_[g][k];
      w.push_back(static_cast<char>(img));
      scale *= c;
    }
  auto [s2, nw] = rules_->nf(std::move(w));
  auto [c, out] = normal_to_pbw(scale * s2, nw);
  ExpPoly p;
  p.emplace(out, c);
  return p;
}

ExpPoly InvariantEngine::act(const ExpPoly& f, int g) const {
  ExpPoly out;
  for (const auto& [a, c] : f)
    for (const auto& [e, v] : act_monomial(a, g)) exp_add(out, e, c * v);
  return out;
}

bool InvariantEngine::invariant(const ExpPoly& f) const {
  const FiniteGroup& G = group();
  return act(f, G.generator("r")) == f && act(f, G.generator("s")) == f;
}

ExpPoly InvariantEngine::average(const ExpPoly& f) const {
  ExpPoly out;
  const FiniteGroup& G = group();
  for (int g = 0; g < G.order(); ++g)
    for (const auto& [e, v] : act(f, g)) exp_add(out, e, v);
  Cyclotomic inv = Cyclotomic(G.order()).inv();
  return mul_scalar(out, inv);
}

ExpPoly InvariantEngine::from_string(const std::string& s) const {
  NcPoly nf = normal_form(pres_.parse(s), gb_);
  ExpPoly out;
  for (const auto& [w, c] : nf.terms) {
    for (size_t k = 1; k < w.size(); ++k)
      if (w[k] > w[k - 1]) throw std::logic_error("normal form word not sorted");
    auto [cc, e] = normal_to_pbw(c, w);
    exp_add(out, e, cc);
  }
  return out;
}

NcPoly InvariantEngine::to_ncpoly(const ExpPoly& f) const {
  NcPoly out;
  // written on the descending normal words, x^e = pbw_scale(e) * nw
  for (const auto& [e, c] : f) {
    auto [scale, nw] = rules_->nf(expo_word(e));
    poly_add_term(out, nw, c * scale);
  }
  return out;
}

std::string InvariantEngine::str(const ExpPoly& f) const {
  // print in the ascending PBW form
  if (f.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f) {
    NcPoly term = poly_term(expo_word(e), c);
    std::string piece = poly_str(term, pres_.gen_names);
    if (!first) {
      if (!piece.empty() && piece[0] == '-') {
        out += " - " + piece.substr(1);
      } else {
        out += " + " + piece;
      }
    } else {
      out += piece;
      first = false;
    }
  }
  return out;
}

Cyclotomic InvariantEngine::lambda(const Expo& a, const std::string& g) const {
  const Cyclotomic I = Cyclotomic::imag();
  Cyclotomic al(params_.alpha), be(params_.beta), ga(params_.gamma);
  auto sgn = [](int k) { return Cyclotomic(k % 2 ? -1 : 1); };
  auto pw = [](const Cyclotomic& b, int k) { return b.pow(k % 2); };  // b = +-1
  if (g == "r") return sgn(a[0]) * I.pow(a[4] + a[5]) * pw(al, a[0]) * pw(be, a[2]) * pw(ga, a[4]);
  if (g == "s") return sgn(a[0] + a[4]) * I.pow(a[0] + a[1]) * pw(be, a[2]) * pw(ga, a[4]);
  if (g == "rs") return sgn(a[4]) * I.pow(a[4] + a[5] + a[0] + a[1]) * pw(al, a[0]);
  throw std::invalid_argument("lambda: g must be r, s or rs");
}

ExpPoly InvariantEngine::orbit_sum(const Expo& a) const {
  if (!in_X(a)) throw std::invalid_argument("orbit_sum: exponent vector not in X");
  ExpPoly f;
  exp_add(f, a, Cyclotomic(1));
  exp_add(f, expo_act_r(a), lambda(a, "r"));
  exp_add(f, expo_act_s(a), lambda(a, "s"));
  exp_add(f, expo_act_rs(a), lambda(a, "rs"));
  if (!invariant(f)) throw std::logic_error("orbit sum failed the invariance check");
  return f;
}

std::vector<Expo> InvariantEngine::identity_grade_exponents(int d) const {
  std::vector<Expo> out;
  Expo e{};
  std::function<void(int, int)> rec = [&](int slot, int left) {
    if (slot == 5) {
      e[5] = left;
      if (identity_grade(e)) out.push_back(e);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[slot] = v;
      rec(slot + 1, left - v);
    }
  };
  rec(0, d);
  return out;
}

std::vector<ExpPoly> InvariantEngine::invariant_space(int d) const {
  // the average of a monomial is supported on its exponent orbit, so the
  // projector image row-reduces orbit by orbit
  std::vector<Expo> expos = identity_grade_exponents(d);
  std::set<Expo> seen;
  std::vector<ExpPoly> basis;
  for (const Expo& a : expos) {
    if (seen.count(a)) continue;
    Expo orbit[4] = {a, expo_act_r(a), expo_act_s(a), expo_act_rs(a)};
    Expo rep = a;
    for (const Expo& o : orbit) {
      seen.insert(o);
      if (ExpoDeglexGreater{}(o, rep)) rep = o;
    }
    ExpPoly v;
    exp_add(v, rep, Cyclotomic(1));
    ExpPoly avg = average(v);
    if (avg.empty()) continue;
    basis.push_back(mul_scalar(avg, avg.begin()->second.inv()));
  }
  std::sort(basis.begin(), basis.end(), [](const ExpPoly& x, const ExpPoly& y) {
    return ExpoDeglexGreater{}(x.begin()->first, y.begin()->first);
  });
  return basis;
}

ExpPoly InvariantEngine::conjclass_component(const ExpPoly& f, int class_index) const {
  const auto& cls = group().conjugacy_classes().at(class_index);
  ExpPoly out;
  for (const auto& [e, c] : f) {
    int g = monomial_grade(e);
    if (std::find(cls.members.begin(), cls.members.end(), g) != cls.members.end())
      exp_add(out, e, c);
  }
  if (!out.empty() && !invariant(out))
    throw std::logic_error("class component of a non-invariant input");
  return out;
}

InvariantEngine::Factorization InvariantEngine::factor_orbit_sum(const Expo& a) const {
  if (!in_X(a)) throw std::invalid_argument("factor_orbit_sum: exponent vector not in X");
  Factorization fac;
  fac.g3_pow = a[1] / 2;
  fac.g1_pow = a[3];
  fac.g2_pow = std::min(a[4], a[5]);
  bool a2_odd = a[1] % 2;
  fac.aprime = {a[0] - a[1] + (a2_odd ? 1 : 0), a2_odd ? 1 : 0,
                a[2] - a[3], 0,
                a[4] >= a[5] ? a[4] - a[5] : 0,
                a[4] >= a[5] ? 0 : a[5] - a[4]};

  // m = g3^i g1^j g2^k as a single PBW monomial with a unit scalar
  ExpPoly m;
  m.emplace(Expo{2 * fac.g3_pow, 2 * fac.g3_pow, fac.g1_pow, fac.g1_pow, fac.g2_pow, fac.g2_pow},
            Cyclotomic(1));
  ExpPoly lhs = orbit_sum(a);
  ExpPoly rhs = mul(m, orbit_sum(fac.aprime));
  if (lhs.empty() && rhs.empty()) return fac;
  if (lhs.empty() != rhs.empty()) throw std::logic_error("orbit-sum factorization failed");
  Cyclotomic ratio = lhs.begin()->second / rhs.begin()->second;
  if (ratio == Cyclotomic(1)) fac.sign = 1;
  else if (ratio == Cyclotomic(-1)) fac.sign = -1;
  else throw std::logic_error("orbit-sum factorization ratio is not a sign");
  if (!(lhs == mul_scalar(rhs, ratio))) throw std::logic_error("orbit-sum factorization failed");
  return fac;
}

long InvariantEngine::broer_bound(const std::vector<ExpPoly>& elems, int gkdim,
                                  std::pair<int, int>* failed_pair) const {
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = i + 1; j < elems.size(); ++j) {
      ExpPoly fg = mul(elems[i], elems[j]);
      ExpPoly gf = mul(elems[j], elems[i]);
      bool ok = false;
      if (fg.empty() && gf.empty()) ok = true;
      else if (!fg.empty() && !gf.empty()) {
        Cyclotomic ratio = fg.begin()->second / gf.begin()->second;
        ok = fg == mul_scalar(gf, ratio);
      }
      if (!ok) {
        if (failed_pair) *failed_pair = {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
        throw std::invalid_argument("broer_bound: elements do not pairwise q-commute");
      }
    }
  long total = 0;
  for (const ExpPoly& f : elems) total += expo_degree(f.begin()->first);
  return total - gkdim;
}

InvariantEngine::SagbiCertificate InvariantEngine::sagbi_check(const std::vector<ExpPoly>& gens,
                                                               int d_max) const {
  SagbiCertificate cert;
  std::vector<Expo> leads;
  std::vector<int> degs;
  for (const ExpPoly& g : gens) {
    leads.push_back(g.begin()->first);
    degs.push_back(expo_degree(g.begin()->first));
  }

  // find multiplicities m with sum m_i lead_i = target and verified additivity
  std::function<bool(const Expo&, size_t, std::vector<int>&)> search =
      [&](const Expo& remaining, size_t from, std::vector<int>& mult) -> bool {
    bool zero = true;
    for (int v : remaining)
      if (v) zero = false;
    if (zero) {
      // verify lead-term additivity on the witnessing product
      ExpPoly prod;
      prod.emplace(Expo{}, Cyclotomic(1));
      Expo want{};
      for (size_t g = 0; g < gens.size(); ++g)
        for (int t = 0; t < mult[g]; ++t) {
          prod = mul(prod, gens[g]);
          for (int k = 0; k < 6; ++k) want[k] += leads[g][k];
        }
      return !prod.empty() && prod.begin()->first == want;
    }
    for (size_t g = from; g < gens.size(); ++g) {
      bool fits = true;
      for (int k = 0; k < 6; ++k)
        if (leads[g][k] > remaining[k]) fits = false;
      if (!fits) continue;
      Expo next = remaining;
      for (int k = 0; k < 6; ++k) next[k] -= leads[g][k];
      mult[g] += 1;
      if (search(next, g, mult)) {
        mult[g] -= 1;
        return true;
      }
      mult[g] -= 1;
    }
    return false;
  };

  for (int d = 1; d <= d_max; ++d) {
    SagbiDegree sd;
    sd.degree = d;
    std::vector<ExpPoly> inv = invariant_space(d);
    sd.space_dim = static_cast<long>(inv.size());
    for (const ExpPoly& f : inv) {
      Expo target = f.begin()->first;
      std::vector<int> mult(gens.size(), 0);
      if (!search(target, 0, mult)) {
        sd.uncovered.push_back(target);
        cert.covered = false;
      }
    }
    cert.per_degree.push_back(std::move(sd));
  }
  return cert;
}

std::vector<ExpPoly> InvariantEngine::minimal_generators() const {
  static const char* defs[17] = {
      "y1*y2",
      "z1*z2",
      "x1^2*x2^2",
      "x1^4 + x2^4",
      "y1^4 + y2^4",
      "z1^4 + z2^4",
      "(x1^2 - x2^2)*(y1^2 - y2^2)",
      "(x1^2 + x2^2)*(z1^2 - z2^2)",
      "(x1*x2)*(x1^4 - x2^4)",
      "(x1*x2)*(x1^2 + x2^2)*(y1^2 - y2^2)",
      "(x1*x2)*(x1^2 - x2^2)*(z1^2 - z2^2)",
      "(x1*x2)*(y1^2*z1^2 + y2^2*z2^2)",
      "(x1*x2)*(y1^2*z2^2 + y2^2*z1^2)",
      "(x1^4 - x2^4)*(y1^2*z2^2 + y2^2*z1^2)",
      "(x1^2 + x2^2)*(y1^4*z2^2 - y2^4*z1^2)",
      "(x1^2 - x2^2)*(y1^2*z2^4 - y2^2*z1^4)",
      "y1^4*z2^4 + y2^4*z1^4",
  };
  std::vector<ExpPoly> out;
  for (const char* s : defs) out.push_back(from_string(s));
  return out;
}

ExpSpan InvariantEngine::subalgebra_degree_span(const std::vector<ExpPoly>& gens, int d) const {
  // all ordered products of the generators with total degree d
  ExpSpan span;
  std::vector<int> degs;
  for (const ExpPoly& g : gens) degs.push_back(expo_degree(g.begin()->first));
  std::function<void(const ExpPoly&, int)> rec = [&](const ExpPoly& acc, int left) {
    if (left == 0) {
      span.insert(acc);
      return;
    }
    for (size_t g = 0; g < gens.size(); ++g) {
      if (degs[g] > left) continue;
      rec(mul(acc, gens[g]), left - degs[g]);
    }
  };
  ExpPoly one;
  one.emplace(Expo{}, Cyclotomic(1));
  rec(one, d);
  return span;
}

std::vector<ExpPoly> InvariantEngine::auxiliary_invariants() const {
  static const char* defs[7] = {
      "y1^4*z2^8 + y2^4*z1^8",
      "(x1^4 - x2^4)*(y1^2*z2^6 + y2^2*z1^6)",
      "(x1^2 + x2^2)*(y1^4*z2^6 - y2^4*z1^6)",
      "(x1*x2)*(x1^2 + x2^2)*(y1^2*z2^4 - y2^2*z1^4)",
      "(x1*x2)*(y1^2*z2^6 + y2^2*z1^6)",
      "(x1*x2)*(x1^2 + x2^2)*(y1^2*z2^8 - y2^2*z1^8)",
      "(x1*x2)*(y1^2*z2^10 + y2^2*z1^10)",
  };
  std::vector<ExpPoly> out;
  for (const char* s : defs) out.push_back(from_string(s));
  return out;
}

InvariantEngine::GenTheoremReport InvariantEngine::verify_generator_theorem(int sagbi_degree) const {
  GenTheoremReport rep;
  std::vector<ExpPoly> gens = minimal_generators();

  const int e = group().id();
  for (size_t i = 0; i < gens.size(); ++i) {
    bool ok = invariant(gens[i]);
    for (const auto& [expo, c] : gens[i]) {
      (void)c;
      if (monomial_grade(expo) != e) ok = false;
    }
    if (!ok) {
      rep.generators_invariant = false;
      rep.failures.push_back("g" + std::to_string(i + 1) + " is not a grade-e invariant");
    }
  }

  // generation, degree by degree: the averaging basis lies in the span of
  // the ordered products of the seventeen generators
  std::map<int, ExpSpan> product_span;
  for (int d = 1; d <= sagbi_degree; ++d) {
    ExpSpan span = subalgebra_degree_span(gens, d);
    for (const ExpPoly& f : invariant_space(d))
      if (!span.contains(f)) {
        rep.generation_ok = false;
        rep.failures.push_back("degree " + std::to_string(d) + " invariant outside the subalgebra");
      }
    product_span.emplace(d, std::move(span));
  }

  // the lead certificate, over the generators plus the auxiliaries;
  // anything it misses must be independently certified by membership
  std::vector<ExpPoly> ext = gens;
  for (ExpPoly& aux : auxiliary_invariants()) ext.push_back(std::move(aux));
  SagbiCertificate cert = sagbi_check(ext, sagbi_degree);
  for (const auto& sd : cert.per_degree)
    for (const Expo& u : sd.uncovered) {
      rep.lead_gaps.push_back(u);
      ExpPoly f = orbit_sum(u);
      if (f.empty() || !product_span.at(sd.degree).contains(f)) {
        rep.sagbi_ok = false;
        rep.failures.push_back("uncovered lead exponent is not even in the subalgebra");
      }
    }

  // minimality: dropping any one generator loses dimension in its degree
  for (size_t i = 0; i < gens.size(); ++i) {
    int d = expo_degree(gens[i].begin()->first);
    std::vector<ExpPoly> others;
    for (size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    ExpSpan span = subalgebra_degree_span(others, d);
    if (span.dim() >= invariant_space(d).size()) {
      rep.minimality_ok = false;
      rep.failures.push_back("g" + std::to_string(i + 1) + " is redundant");
    }
  }

  // the seven recorded identities among the auxiliary invariants
  auto& E = *this;
  auto g = [&](int k) { return gens[k - 1]; };
  ExpPoly g2sq = E.mul(g(2), g(2));
  ExpPoly g2p4 = E.mul(g2sq, g2sq);
  ExpPoly g18 = from_string("y1^4*z2^8 + y2^4*z1^8");
  ExpPoly g19 = from_string("(x1^4 - x2^4)*(y1^2*z2^6 + y2^2*z1^6)");
  ExpPoly g20 = from_string("(x1^2 + x2^2)*(y1^4*z2^6 - y2^4*z1^6)");
  ExpPoly g21 = from_string("(x1*x2)*(x1^2 + x2^2)*(y1^2*z2^4 - y2^2*z1^4)");
  ExpPoly g22 = from_string("(x1*x2)*(y1^2*z2^6 + y2^2*z1^6)");
  ExpPoly g23 = from_string("(x1*x2)*(x1^2 + x2^2)*(y1^2*z2^8 - y2^2*z1^8)");
  ExpPoly g24 = from_string("(x1*x2)*(y1^2*z2^10 + y2^2*z1^10)");
  auto check_id = [&](const char* name, const ExpPoly& lhs, const ExpPoly& rhs) {
    if (!(lhs == rhs)) {
      rep.identities_ok = false;
      rep.failures.push_back(std::string("identity for ") + name + " fails");
    }
  };
  auto sub = [&](const ExpPoly& x, const ExpPoly& y) {
    ExpPoly out = x;
    for (const auto& [eo, c] : y) exp_add(out, eo, -c);
    return out;
  };
  auto add = [&](const ExpPoly& x, const ExpPoly& y) {
    ExpPoly out = x;
    for (const auto& [eo, c] : y) exp_add(out, eo, c);
    return out;
  };
  check_id("g18", g18, sub(E.mul(g(17), g(6)), E.mul(g(5), g2p4)));
  check_id("g19", g19, add(add(E.mul(g(14), g(6)), E.mul(E.mul(g(7), g(8)), g2sq)), E.mul(g(14), g2sq)));
  check_id("g20", g20, add(add(E.mul(g(15), g(6)), E.mul(E.mul(g(8), g(5)), g2sq)), E.mul(g(15), g2sq)));
  check_id("g21", g21,
           mul_scalar(sub(sub(E.mul(g(10), g(6)), E.mul(g(8), g(12))), E.mul(g(8), g(13))),
                      Cyclotomic(qd::rat(1, 2))));
  check_id("g22", g22, add(E.mul(g(13), g(6)), E.mul(g(12), g2sq)));
  check_id("g23", g23, sub(E.mul(g21, g(6)), E.mul(g(10), g2p4)));
  check_id("g24", g24, sub(E.mul(g22, g(6)), E.mul(g(13), g2p4)));

  return rep;
}

}  // namespace qd
