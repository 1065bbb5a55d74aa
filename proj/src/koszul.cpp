#include "qd/koszul.hpp"

#include <algorithm>
#include <stdexcept>

namespace qd {

AlgebraPresentation quadratic_dual(const AlgebraPresentation& pres) {
  int m = pres.gen_count();
  AlgebraPresentation dual;
  for (const std::string& nm : pres.gen_names) dual.gen_names.push_back(nm + "'");

  Mat R;
  for (const NcPoly& rel : pres.relations) {
    if (rel.is_zero()) continue;
    Vec row(static_cast<size_t>(m) * m, Cyclotomic(0));
    for (const auto& [w, c] : rel.terms) {
      if (w.size() != 2) throw std::invalid_argument("quadratic_dual needs quadratic relations");
      row[static_cast<unsigned char>(w[0]) * m + static_cast<unsigned char>(w[1])] = c;
    }
    R.push_back(std::move(row));
  }

  Mat perp;
  if (R.empty()) {
    perp = mat_identity(static_cast<size_t>(m) * m);
  } else {
    perp = nullspace(R);
  }
  for (const Vec& row : perp) {
    NcPoly rel;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        const Cyclotomic& c = row[a * m + b];
        if (!c.is_zero()) poly_add_term(rel, Word{static_cast<char>(a), static_cast<char>(b)}, c);
      }
    dual.relations.push_back(std::move(rel));
  }
  return dual;
}

namespace {

std::vector<Word> normal_words(const GroebnerBasis& gb, int gens, int d) {
  // enumerate words of length d avoiding every lead word as a subword
  std::vector<Word> leads;
  for (const auto& e : gb.elems) leads.push_back(e.lead_word());
  std::vector<Word> out;
  Word w;
  std::function<void()> walk = [&] {
    if (static_cast<int>(w.size()) == d) {
      out.push_back(w);
      return;
    }
    for (int a = 0; a < gens; ++a) {
      w.push_back(static_cast<char>(a));
      bool dead = false;
      for (const Word& l : leads)
        if (w.size() >= l.size() && std::equal(l.begin(), l.end(), w.end() - l.size())) {
          dead = true;
          break;
        }
      if (!dead) walk();
      w.pop_back();
    }
  };
  walk();
  return out;
}

}  // namespace

KoszulData koszul_analyze(const AlgebraPresentation& pres) {
  KoszulData kd;
  kd.n = pres.gen_count();
  kd.dual = quadratic_dual(pres);
  kd.dual_gb = groebner(kd.dual, kd.n);
  kd.dual_dims = hilbert_from_gb(kd.dual_gb, kd.n, kd.n);
  kd.top_dim = kd.dual_dims[kd.n];
  if (kd.top_dim == 1) {
    // prefer the full ascending product x1' x2' ... xm' when it is nonzero
    Word ascending;
    for (int a = 0; a < kd.n; ++a) ascending.push_back(static_cast<char>(a));
    NcPoly nf = normal_form(poly_term(ascending), kd.dual_gb);
    if (!nf.is_zero()) {
      kd.theta = ascending;
      kd.theta_nf = nf;
    } else {
      std::vector<Word> top = normal_words(kd.dual_gb, kd.n, kd.n);
      kd.theta = top.at(0);
      kd.theta_nf = poly_term(kd.theta);
    }
  }
  return kd;
}

Cyclotomic theta_coefficient(const KoszulData& kd, const Word& dual_word) {
  if (kd.top_dim != 1) throw std::domain_error("dual top degree is not one-dimensional");
  NcPoly nf = normal_form(poly_term(dual_word), kd.dual_gb);
  if (nf.is_zero()) return Cyclotomic(0);
  return nf.lead_coeff() / kd.theta_nf.coeff(nf.lead_word());
}

Superpotential superpotential(const AlgebraPresentation& pres, const KoszulData& kd) {
  if (kd.top_dim != 1)
    throw std::domain_error("not Frobenius-compatible at top degree: dim != 1");
  int n = kd.n;

  // memoized product of a dual normal word with one more dual generator
  std::map<std::pair<Word, int>, NcPoly> step;
  auto extend = [&](const NcPoly& v, int letter) {
    NcPoly out;
    for (const auto& [w, c] : v.terms) {
      auto key = std::make_pair(w, letter);
      auto it = step.find(key);
      if (it == step.end()) {
        NcPoly nf = normal_form(poly_term(w + static_cast<char>(letter)), kd.dual_gb);
        it = step.emplace(key, std::move(nf)).first;
      }
      out += it->second.scaled(c);
    }
    return out;
  };

  Superpotential sp;
  sp.theta = kd.theta;
  Word prefix;
  const Cyclotomic theta_lead = kd.theta_nf.lead_coeff();
  const Word theta_top = kd.theta_nf.lead_word();
  std::function<void(const NcPoly&)> dfs = [&](const NcPoly& v) {
    if (static_cast<int>(prefix.size()) == n) {
      Cyclotomic c = v.coeff(theta_top) / theta_lead;
      if (!c.is_zero()) sp.w.terms.emplace(prefix, c);
      return;
    }
    for (int a = 0; a < n; ++a) {
      NcPoly next = extend(v, a);
      if (next.is_zero()) continue;
      prefix.push_back(static_cast<char>(a));
      dfs(next);
      prefix.pop_back();
    }
  };
  dfs(poly_const(Cyclotomic(1)));

  if (sp.w.is_zero()) throw std::logic_error("superpotential vanished");
  sp.w = sp.w.scaled(sp.w.lead_coeff().inv());

  if (!pres.gen_grade.empty()) {
    sp.grade_trivial = true;
    int e = pres.group->id();
    for (const auto& [w, c] : sp.w.terms) {
      (void)c;
      if (pres.word_grade(w) != e) sp.grade_trivial = false;
    }
    if (!sp.grade_trivial)
      throw std::logic_error("superpotential has a monomial of nontrivial group grade");
  }
  return sp;
}

HdetReport hdet(const AlgebraPresentation& pres, const Superpotential& sp) {
  if (!pres.action) throw std::domain_error("hdet needs a Hopf action");
  HdetReport rep;
  rep.grade_trivial = sp.grade_trivial;
  for (const auto& [gname, h] : pres.action->group->generators()) {
    NcPoly image = apply_group_free(pres, h, sp.w);
    // image must be a scalar multiple of w
    Cyclotomic lambda = image.coeff(sp.w.lead_word());
    if (!(image == sp.w.scaled(lambda)))
      throw std::logic_error("superpotential is not an eigenvector of " + gname);
    rep.values.push_back({gname, lambda});
  }
  return rep;
}

Mat nakayama(const KoszulData& kd) {
  if (kd.top_dim != 1) throw std::domain_error("dual top degree is not one-dimensional");
  int m = kd.n;
  std::vector<Word> mid = normal_words(kd.dual_gb, m, m - 1);
  if (static_cast<int>(mid.size()) != m)
    throw std::domain_error("Frobenius form is degenerate: dim B^!_{n-1} != n");

  // F[i][w] = <x*_i, b_w>, G[w][j] = <b_w, x*_j>
  Mat F(m, Vec(m, Cyclotomic(0))), Gm(m, Vec(m, Cyclotomic(0)));
  for (int i = 0; i < m; ++i)
    for (int w = 0; w < m; ++w) {
      F[i][w] = theta_coefficient(kd, Word(1, static_cast<char>(i)) + mid[w]);
      Gm[w][i] = theta_coefficient(kd, mid[w] + Word(1, static_cast<char>(i)));
    }
  // <a, b> = <b, nu(a)>: F = nu * G^T
  Mat nu = mat_mul(F, mat_inverse(mat_transpose(Gm)));

  // transport to B_1, calibrated once on the D4 family at parameters
  // (1,1,1,1,1,1,1): mu = (-1)^{n-1} nu
  return (m % 2 == 0) ? mat_scale(nu, Cyclotomic(-1)) : nu;
}

Mat derivation_quotient_span(const AlgebraPresentation& pres, const Superpotential& sp) {
  int m = pres.gen_count();
  int n = static_cast<int>(sp.w.lead_word().size());
  std::map<Word, Vec> rows;  // prefix -> coefficients over degree-2 words
  for (const auto& [w, c] : sp.w.terms) {
    Word u = w.substr(0, n - 2);
    Word v = w.substr(n - 2);
    auto [it, fresh] = rows.try_emplace(u, Vec(static_cast<size_t>(m) * m, Cyclotomic(0)));
    (void)fresh;
    it->second[static_cast<unsigned char>(v[0]) * m + static_cast<unsigned char>(v[1])] += c;
  }
  Mat out;
  for (auto& [u, row] : rows) {
    (void)u;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace qd
