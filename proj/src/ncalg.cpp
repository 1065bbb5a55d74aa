#include "qd/ncalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string_view>

namespace qd {

Mat HopfAction::degree1_matrix(int h) const {
  int m = static_cast<int>(slot.size());
  Mat out(m, Vec(m, Cyclotomic(0)));
  for (int i = 0; i < m; ++i) {
    const auto& [si, bi] = slot[i];
    const Mat& A = summands[si].group_action[h];
    for (int j = 0; j < m; ++j) {
      const auto& [sj, bj] = slot[j];
      if (si == sj) out[i][j] = A[bi][bj];
    }
  }
  return out;
}

int AlgebraPresentation::word_grade(const Word& w) const {
  if (!group) throw std::domain_error("presentation carries no group grading");
  int g = group->id();
  for (char ch : w) g = group->mul(g, gen_grade[static_cast<unsigned char>(ch)]);
  return g;
}

namespace {

// Rules indexed by lead word for subword search.
struct RuleIndex {
  std::map<size_t, std::map<Word, int, std::less<>>> by_len;

  void add(const Word& lead, int id) { by_len[lead.size()][lead] = id; }

  // first (position, rule) whose lead occurs as a subword of w
  bool find(const Word& w, size_t& pos_out, int& id_out) const {
    for (size_t pos = 0; pos < w.size(); ++pos) {
      for (const auto& [len, rules] : by_len) {
        if (pos + len > w.size()) break;
        auto it = rules.find(std::string_view(w).substr(pos, len));
        if (it != rules.end()) {
          pos_out = pos;
          id_out = it->second;
          return true;
        }
      }
    }
    return false;
  }
};

NcPoly reduce_poly(NcPoly p, const std::vector<NcPoly>& rules, const RuleIndex& index) {
  NcPoly out;
  while (!p.is_zero()) {
    const Word w = p.lead_word();
    const Cyclotomic c = p.lead_coeff();
    size_t pos = 0;
    int rid = -1;
    if (!index.find(w, pos, rid)) {
      out.terms.emplace(w, c);
      p.terms.erase(p.terms.begin());
      continue;
    }
    const NcPoly& r = rules[rid];
    const Word& L = r.lead_word();
    Word u = w.substr(0, pos), v = w.substr(pos + L.size());
    for (const auto& [t, ct] : r.terms) poly_add_term(p, u + t + v, -(c * ct));
  }
  return out;
}

NcPoly make_monic(const NcPoly& p) {
  return p.scaled(p.lead_coeff().inv());
}

}  // namespace

GroebnerBasis groebner(const AlgebraPresentation& pres, int degree_bound) {
  if (degree_bound < 2) throw std::invalid_argument("groebner: degree bound must be >= 2");
  std::vector<NcPoly> rules;
  RuleIndex index;
  auto push_rule = [&](const NcPoly& p) {
    rules.push_back(p);
    index.add(p.lead_word(), static_cast<int>(rules.size()) - 1);
  };

  // seed with inter-reduced monic relations
  std::vector<NcPoly> seed;
  for (const NcPoly& r : pres.relations) {
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) throw std::invalid_argument("relations must be homogeneous");
    seed.push_back(r);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < seed.size(); ++i) {
      std::vector<NcPoly> others;
      RuleIndex oidx;
      for (size_t j = 0; j < seed.size(); ++j)
        if (j != i && !seed[j].is_zero()) {
          others.push_back(make_monic(seed[j]));
          oidx.add(others.back().lead_word(), static_cast<int>(others.size()) - 1);
        }
      NcPoly red = reduce_poly(seed[i], others, oidx);
      if (!(red == seed[i])) {
        seed[i] = red;
        changed = true;
      }
    }
  }
  for (const NcPoly& r : seed)
    if (!r.is_zero()) push_rule(make_monic(r));

  // overlap queue: (overlap degree, i, j, shift); f_i placed at 0, f_j at shift
  using Key = std::tuple<int, int, int, int>;
  std::set<Key> queue;
  auto enqueue_pairs = [&](int i) {
    const Word& Li = rules[i].lead_word();
    for (int j = 0; j < static_cast<int>(rules.size()); ++j) {
      const Word& Lj = rules[j].lead_word();
      // f_i first
      for (int s = (i == j ? 1 : 0); s < static_cast<int>(Li.size()); ++s) {
        size_t over = std::min(Li.size() - s, Lj.size());
        if (std::string_view(Li).substr(s, over) != std::string_view(Lj).substr(0, over)) continue;
        int deg = static_cast<int>(std::max(Li.size(), s + Lj.size()));
        if (deg <= degree_bound) queue.insert({deg, i, j, s});
      }
      // f_j first
      if (j == i) continue;
      for (int s = 0; s < static_cast<int>(Lj.size()); ++s) {
        size_t over = std::min(Lj.size() - s, Li.size());
        if (std::string_view(Lj).substr(s, over) != std::string_view(Li).substr(0, over)) continue;
        int deg = static_cast<int>(std::max(Lj.size(), s + Li.size()));
        if (deg <= degree_bound) queue.insert({deg, j, i, s});
      }
    }
  };
  for (int i = 0; i < static_cast<int>(rules.size()); ++i) enqueue_pairs(i);

  while (!queue.empty()) {
    auto [deg, i, j, s] = *queue.begin();
    queue.erase(queue.begin());
    const Word& Li = rules[i].lead_word();
    const Word& Lj = rules[j].lead_word();
    NcPoly S;
    if (s + Lj.size() <= Li.size()) {
      // inclusion: f_i - pre * f_j * suf
      Word pre = Li.substr(0, s), suf = Li.substr(s + Lj.size());
      S = rules[i] - sandwich(pre, rules[j], suf);
    } else {
      Word tail = Lj.substr(Li.size() - s);  // completes f_i to the overlap word
      Word pre = Li.substr(0, s);
      S = sandwich(Word{}, rules[i], tail) - sandwich(pre, rules[j], Word{});
    }
    NcPoly red = reduce_poly(std::move(S), rules, index);
    if (red.is_zero()) continue;
    if (red.degree() > degree_bound) continue;
    push_rule(make_monic(red));
    enqueue_pairs(static_cast<int>(rules.size()) - 1);
  }

  // final inter-reduction for a canonical reduced basis
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < rules.size(); ++i) {
      if (rules[i].is_zero()) continue;
      std::vector<NcPoly> others;
      RuleIndex oidx;
      for (size_t j = 0; j < rules.size(); ++j)
        if (j != i && !rules[j].is_zero()) {
          others.push_back(rules[j]);
          oidx.add(rules[j].lead_word(), static_cast<int>(others.size()) - 1);
        }
      NcPoly red = reduce_poly(rules[i], others, oidx);
      if (!(red == rules[i])) {
        rules[i] = red.is_zero() ? NcPoly{} : make_monic(red);
        changed = true;
      }
    }
  }

  GroebnerBasis gb;
  gb.degree_bound = degree_bound;
  for (const NcPoly& r : rules)
    if (!r.is_zero()) gb.elems.push_back(r);
  std::sort(gb.elems.begin(), gb.elems.end(),
            [](const NcPoly& a, const NcPoly& b) { return DeglexGreater{}(b.lead_word(), a.lead_word()); });
  return gb;
}

NcPoly normal_form(NcPoly p, const GroebnerBasis& gb) {
  RuleIndex index;
  for (size_t i = 0; i < gb.elems.size(); ++i) index.add(gb.elems[i].lead_word(), static_cast<int>(i));
  return reduce_poly(std::move(p), gb.elems, index);
}

namespace {

// Prefix automaton over the lead-word set for counting/enumerating normal words.
struct NormalWordAutomaton {
  std::vector<Word> states;               // proper prefixes of leads, state 0 = ""
  std::vector<std::vector<int>> next;     // -1 = dead
  int gens;

  NormalWordAutomaton(const std::vector<NcPoly>& elems, int m) : gens(m) {
    std::set<Word> prefs;
    std::set<Word> leads;
    for (const auto& e : elems) leads.insert(e.lead_word());
    prefs.insert(Word{});
    for (const Word& l : leads)
      for (size_t k = 1; k < l.size(); ++k) prefs.insert(l.substr(0, k));
    states.assign(prefs.begin(), prefs.end());
    auto state_id = [&](const Word& w) -> int {
      auto it = std::lower_bound(states.begin(), states.end(), w);
      if (it != states.end() && *it == w) return static_cast<int>(it - states.begin());
      return -1;
    };
    next.assign(states.size(), std::vector<int>(m, -1));
    for (size_t st = 0; st < states.size(); ++st)
      for (int a = 0; a < m; ++a) {
        Word w = states[st] + static_cast<char>(a);
        bool dead = false;
        for (size_t k = 0; k < w.size() && !dead; ++k)
          if (leads.count(w.substr(k))) dead = true;
        if (dead) continue;
        for (size_t k = 0; k <= w.size(); ++k) {
          int id = state_id(w.substr(k));
          if (id >= 0) {
            next[st][a] = id;
            break;
          }
        }
      }
  }
};

}  // namespace

std::vector<long> hilbert_from_gb(const GroebnerBasis& gb, int gens, int d) {
  NormalWordAutomaton aut(gb.elems, gens);
  std::vector<long> counts{1};
  std::vector<long> cur(aut.states.size(), 0);
  cur[0] = 1;
  for (int deg = 1; deg <= d; ++deg) {
    std::vector<long> nxt(aut.states.size(), 0);
    for (size_t st = 0; st < aut.states.size(); ++st) {
      if (cur[st] == 0) continue;
      for (int a = 0; a < gens; ++a) {
        int to = aut.next[st][a];
        if (to >= 0) nxt[to] += cur[st];
      }
    }
    cur = std::move(nxt);
    long total = 0;
    for (long v : cur) total += v;
    counts.push_back(total);
  }
  return counts;
}

std::vector<long> hilbert_coeffs(const AlgebraPresentation& pres, int d) {
  GroebnerBasis gb = groebner(pres, d + 1);
  return hilbert_from_gb(gb, pres.gen_count(), d);
}

bool zero_divisor_witness(const NcPoly& p, const NcPoly& q, const GroebnerBasis& gb) {
  if (p.is_zero() || q.is_zero()) return false;
  if (p.degree() + q.degree() > gb.degree_bound)
    throw std::invalid_argument("zero_divisor_witness: degree bound too small for the product");
  NcPoly np = normal_form(p, gb), nq = normal_form(q, gb);
  if (np.is_zero() || nq.is_zero()) return false;
  return normal_form(np * nq, gb).is_zero();
}

std::vector<Word> pbw_monomials(const AlgebraPresentation& pres, const GroebnerBasis& gb, int d) {
  NormalWordAutomaton aut(gb.elems, pres.gen_count());
  std::vector<Word> normal;
  Word w;
  std::function<void(int)> walk = [&](int st) {
    if (static_cast<int>(w.size()) == d) {
      normal.push_back(w);
      return;
    }
    for (int a = 0; a < pres.gen_count(); ++a) {
      int to = aut.next[st][a];
      if (to < 0) continue;
      w.push_back(static_cast<char>(a));
      walk(to);
      w.pop_back();
    }
  };
  walk(0);

  bool all_noninc = true, all_nondec = true;
  for (const Word& nw : normal)
    for (size_t k = 1; k < nw.size(); ++k) {
      if (nw[k - 1] < nw[k]) all_noninc = false;
      if (nw[k - 1] > nw[k]) all_nondec = false;
    }
  // sorted words of one orientation are in bijection with exponent vectors
  long expect = 1;
  for (int j = 1; j <= d; ++j) expect = expect * (pres.gen_count() - 1 + j) / j;
  if ((!all_noninc && !all_nondec) || static_cast<long>(normal.size()) != expect)
    throw std::domain_error("normal words at this degree are not sorted monomials");

  std::vector<Word> out;
  out.reserve(normal.size());
  for (Word nw : normal) {
    std::sort(nw.begin(), nw.end());  // ascending PBW form x1^a1 x2^a2 ...
    out.push_back(std::move(nw));
  }
  std::sort(out.begin(), out.end(), DeglexGreater{});
  return out;
}

bool relation_submodule_check(const AlgebraPresentation& pres) {
  if (!pres.action) throw std::domain_error("relation_submodule_check needs a Hopf action");
  const HopfAction& act = *pres.action;
  const FiniteGroup& G = *act.group;
  int m = pres.gen_count();

  // coordinates: degree-2 words in descending term order
  std::vector<Word> words;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) words.push_back(Word{static_cast<char>(a), static_cast<char>(b)});
  std::sort(words.begin(), words.end(), DeglexGreater{});
  std::map<Word, int> windex;
  for (size_t k = 0; k < words.size(); ++k) windex[words[k]] = static_cast<int>(k);

  auto to_vec = [&](const NcPoly& p) {
    Vec v(words.size(), Cyclotomic(0));
    for (const auto& [w, c] : p.terms) {
      if (w.size() != 2) throw std::invalid_argument("relation is not quadratic");
      v[windex.at(w)] = c;
    }
    return v;
  };

  Mat span;
  for (const NcPoly& r : pres.relations) span.push_back(to_vec(r));
  std::vector<size_t> piv = rref(span);

  // stability under the grade projections phi_g: each graded component stays inside
  for (const NcPoly& r : pres.relations) {
    std::map<int, NcPoly> comps;
    for (const auto& [w, c] : r.terms) {
      int g = G.mul(act.grade(w[0]), act.grade(w[1]));
      poly_add_term(comps[g], w, c);
    }
    for (const auto& [g, comp] : comps) {
      (void)g;
      if (!in_row_space(span, piv, to_vec(comp))) return false;
    }
  }

  // stability under the group part, checked on the group generators
  for (const auto& [gname, h] : G.generators()) {
    (void)gname;
    Mat M1 = act.degree1_matrix(h);
    for (const NcPoly& r : pres.relations) {
      NcPoly image;
      for (const auto& [w, c] : r.terms) {
        int a = static_cast<unsigned char>(w[0]), b = static_cast<unsigned char>(w[1]);
        for (int a2 = 0; a2 < m; ++a2) {
          if (M1[a][a2].is_zero()) continue;
          for (int b2 = 0; b2 < m; ++b2) {
            if (M1[b][b2].is_zero()) continue;
            poly_add_term(image, Word{static_cast<char>(a2), static_cast<char>(b2)}, c * M1[a][a2] * M1[b][b2]);
          }
        }
      }
      if (!in_row_space(span, piv, to_vec(image))) return false;
    }
  }
  return true;
}

NcPoly apply_group_free(const AlgebraPresentation& pres, int h, const NcPoly& p) {
  if (!pres.action) throw std::domain_error("presentation carries no Hopf action");
  Mat M1 = pres.action->degree1_matrix(h);
  int m = pres.gen_count();
  NcPoly out;
  for (const auto& [w, c] : p.terms) {
    NcPoly acc = poly_const(c);
    for (char ch : w) {
      NcPoly lin;
      int a = static_cast<unsigned char>(ch);
      for (int b = 0; b < m; ++b)
        if (!M1[a][b].is_zero()) poly_add_term(lin, Word(1, static_cast<char>(b)), M1[a][b]);
      acc = acc * lin;
    }
    out += acc;
  }
  return out;
}

NcPoly apply_group_nf(const AlgebraPresentation& pres, const GroebnerBasis& gb, int h,
                      const NcPoly& p) {
  return normal_form(apply_group_free(pres, h, p), gb);
}

NcPoly grade_component(const AlgebraPresentation& pres, const NcPoly& p, int g) {
  NcPoly out;
  for (const auto& [w, c] : p.terms)
    if (pres.word_grade(w) == g) poly_add_term(out, w, c);
  return out;
}

std::optional<MonomialRules> MonomialRules::from_gb(const GroebnerBasis& gb, int gens) {
  MonomialRules mr;
  mr.m_ = gens;
  mr.table_.assign(static_cast<size_t>(gens) * gens, R{});
  for (const NcPoly& e : gb.elems) {
    if (e.degree() != 2 || e.terms.size() != 2) return std::nullopt;
    auto it = e.terms.begin();
    const Word& lead = it->first;
    ++it;
    const Word& tail = it->first;
    if (tail.size() != 2) return std::nullopt;
    R r;
    r.present = true;
    r.c = tail[0];
    r.d = tail[1];
    r.scale = -it->second;  // lead = -tail_coeff * tail
    mr.table_[static_cast<unsigned char>(lead[0]) * gens + static_cast<unsigned char>(lead[1])] = r;
  }
  return mr;
}

std::pair<Cyclotomic, Word> MonomialRules::nf(Word w) const {
  Cyclotomic scale(1);
  size_t i = 0;
  while (i + 1 < w.size()) {
    const R& r = table_[static_cast<unsigned char>(w[i]) * m_ + static_cast<unsigned char>(w[i + 1])];
    if (r.present) {
      w[i] = r.c;
      w[i + 1] = r.d;
      scale *= r.scale;
      if (i > 0) --i;
    } else {
      ++i;
    }
  }
  return {scale, w};
}

namespace {

std::shared_ptr<const FiniteGroup> shared_group(FiniteGroup g) {
  return std::make_shared<const FiniteGroup>(std::move(g));
}

HopfAction make_action(std::shared_ptr<const FiniteGroup> G, const std::vector<int>& indices) {
  HopfAction act;
  act.group = std::move(G);
  auto all = simples(*act.group);
  for (int idx : indices) act.summands.push_back(all[idx]);
  for (size_t k = 0; k < act.summands.size(); ++k)
    for (int b = 0; b < act.summands[k].dim; ++b) act.slot.push_back({static_cast<int>(k), b});
  return act;
}

void check_unit_params(const FamilyParams& p) {
  if (p.alpha * p.alpha != 1 || p.beta * p.beta != 1 || p.gamma * p.gamma != 1)
    throw std::invalid_argument("alpha, beta, gamma must be +1 or -1");
  if (p.u1.is_zero() || p.u2.is_zero() || p.u3.is_zero() || p.u4.is_zero())
    throw std::invalid_argument("parameters u1..u4 must be nonzero");
}

}  // namespace

AlgebraPresentation d4_algebra(const FamilyParams& p) {
  check_unit_params(p);
  AlgebraPresentation A;
  A.gen_names = {"x1", "x2", "y1", "y2", "z1", "z2"};
  A.expected_gkdim = 6;
  A.action = make_action(shared_group(FiniteGroup::dicyclic(2)), {17, 20, 21});
  A.group = A.action->group;
  for (int g = 0; g < 6; ++g) A.gen_grade.push_back(A.action->grade(g));

  const Cyclotomic I = Cyclotomic::imag();
  auto W = [](int a, int b) { return poly_term(Word{static_cast<char>(a), static_cast<char>(b)}); };
  Cyclotomic al(p.alpha), be(p.beta), ga(p.gamma);
  // x1=0 x2=1 y1=2 y2=3 z1=4 z2=5
  A.relations = {
      W(0, 1) - W(1, 0).scaled(al),
      W(2, 3) - W(3, 2).scaled(be),
      W(4, 5) - W(5, 4).scaled(ga),
      W(0, 2) - W(2, 1).scaled(p.u1),
      W(1, 2) - W(2, 0).scaled(p.u1),
      W(0, 3) + W(3, 1).scaled(p.u1),
      W(1, 3) + W(3, 0).scaled(p.u1),
      W(0, 4) - W(4, 1).scaled(I * p.u2),
      W(1, 4) - W(4, 0).scaled(I * p.u2),
      W(0, 5).scaled(I) - W(5, 1).scaled(p.u2),
      W(1, 5).scaled(I) - W(5, 0).scaled(p.u2),
      W(2, 5) - W(5, 2).scaled(p.u3),
      W(3, 4) - W(4, 3).scaled(p.u3),
      W(2, 4) - W(4, 2).scaled(p.u4),
      W(3, 5) - W(5, 3).scaled(p.u4),
  };
  return A;
}

AlgebraPresentation d8_algebra(const FamilyParams& p) {
  check_unit_params(p);
  AlgebraPresentation A;
  A.gen_names = {"x1", "x2", "x3", "x4", "y1", "y2", "z1", "z2"};
  A.expected_gkdim = 8;
  A.action = make_action(shared_group(FiniteGroup::dicyclic(4)), {45, 32, 37});
  A.group = A.action->group;
  for (int g = 0; g < 8; ++g) A.gen_grade.push_back(A.action->grade(g));

  const Cyclotomic I = Cyclotomic::imag();
  const Cyclotomic w8 = Cyclotomic::root(8, 1);
  const Cyclotomic inv_sqrt2 = (w8 + w8.conj()).inv();
  auto W = [](int a, int b) { return poly_term(Word{static_cast<char>(a), static_cast<char>(b)}); };
  Cyclotomic be(p.beta), ga(p.gamma);
  Cyclotomic as2 = Cyclotomic(p.alpha) * inv_sqrt2;  // alpha / sqrt(2)
  // x1=0 x2=1 x3=2 x4=3 y1=4 y2=5 z1=6 z2=7
  A.relations = {
      W(4, 5) - W(5, 4).scaled(be),
      W(6, 7) - W(7, 6).scaled(ga),
      W(4, 0) + W(0, 5).scaled(p.u3),
      W(5, 0) - W(0, 4).scaled(p.u3),
      W(4, 1) - W(1, 5).scaled(p.u3),
      W(5, 1) + W(1, 4).scaled(p.u3),
      W(4, 2) + W(2, 5).scaled(p.u3),
      W(5, 2) - W(2, 4).scaled(p.u3),
      W(4, 3) - W(3, 5).scaled(p.u3),
      W(5, 3) + W(3, 4).scaled(p.u3),
      W(6, 0) + W(0, 7).scaled(I * p.u4),
      W(7, 0) - W(0, 6).scaled(p.u4),
      W(6, 1) - W(1, 7).scaled(p.u4),
      W(7, 1) + W(1, 6).scaled(I * p.u4),
      W(6, 2) - W(2, 7).scaled(I * p.u4),
      W(7, 2) + W(2, 6).scaled(p.u4),
      W(6, 3) + W(3, 7).scaled(p.u4),
      W(7, 3) - W(3, 6).scaled(I * p.u4),
      W(6, 4) - W(4, 6).scaled(p.u2),
      W(7, 4) - W(4, 7).scaled(p.u1),
      W(6, 5) - W(5, 6).scaled(p.u1),
      W(7, 5) - W(5, 7).scaled(p.u2),
      W(0, 2) + W(2, 0),
      W(1, 3) + W(3, 1),
      W(1, 0) - (W(2, 1).scaled(w8.pow(3)) + W(0, 3).scaled(w8)).scaled(as2),
      W(3, 0) - (W(0, 1).scaled(w8) + W(2, 3).scaled(w8.pow(7))).scaled(as2),
      W(1, 2) - (W(0, 1).scaled(w8.pow(3)) + W(2, 3).scaled(w8.pow(5))).scaled(as2),
      W(3, 2) - (W(2, 1).scaled(w8.pow(5)) + W(0, 3).scaled(w8.pow(7))).scaled(as2),
  };
  return A;
}

AlgebraPresentation s3_candidate(int second_summand) {
  if (second_summand < 2 || second_summand > 5)
    throw std::invalid_argument("s3_candidate: partner summand must be one of 2, 3, 4, 5");
  AlgebraPresentation A;
  A.gen_names = {"x", "y", "z"};
  A.expected_gkdim = 3;
  A.action = make_action(shared_group(FiniteGroup::symmetric3()), {6});
  A.group = A.action->group;
  for (int g = 0; g < 3; ++g) A.gen_grade.push_back(A.action->grade(g));

  const Cyclotomic z3 = Cyclotomic::root(3, 1);
  auto W = [](int a, int b) { return poly_term(Word{static_cast<char>(a), static_cast<char>(b)}); };
  // generators of the summands of V6 (x) V6; x=0 y=1 z=2
  NcPoly v0 = W(0, 0) + W(1, 1) + W(2, 2);
  std::vector<NcPoly> partner;
  switch (second_summand) {
    case 2:
      partner = {W(0, 0) + W(1, 1).scaled(z3) + W(2, 2).scaled(z3 * z3),
                 W(0, 0) + W(1, 1).scaled(z3 * z3) + W(2, 2).scaled(z3)};
      break;
    case 3:
      partner = {W(0, 1) + W(2, 0) + W(1, 2), W(0, 2) + W(1, 0) + W(2, 1)};
      break;
    case 4:
      partner = {W(0, 1) + W(2, 0).scaled(z3 * z3) + W(1, 2).scaled(z3),
                 W(0, 2) + W(1, 0).scaled(z3 * z3) + W(2, 1).scaled(z3)};
      break;
    default:
      partner = {W(0, 1) + W(2, 0).scaled(z3) + W(1, 2).scaled(z3 * z3),
                 W(0, 2) + W(1, 0).scaled(z3) + W(2, 1).scaled(z3 * z3)};
      break;
  }
  // canonical basis of the relation span
  Mat rows;
  std::vector<Word> words;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) words.push_back(Word{static_cast<char>(a), static_cast<char>(b)});
  std::sort(words.begin(), words.end(), DeglexGreater{});
  auto to_vec = [&](const NcPoly& p) {
    Vec v(words.size(), Cyclotomic(0));
    for (const auto& [w, c] : p.terms)
      v[std::find(words.begin(), words.end(), w) - words.begin()] = c;
    return v;
  };
  rows.push_back(to_vec(v0));
  for (const auto& r : partner) rows.push_back(to_vec(r));
  rref(rows);
  for (const Vec& row : rows) {
    NcPoly r;
    for (size_t k = 0; k < words.size(); ++k) poly_add_term(r, words[k], row[k]);
    A.relations.push_back(std::move(r));
  }
  return A;
}

}  // namespace qd
