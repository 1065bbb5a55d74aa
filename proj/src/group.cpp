#include "qd/group.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace qd {

namespace {
int dic_idx(int n, int eps, int k) {
  int m = 2 * n;
  k %= m;
  if (k < 0) k += m;
  return eps * m + k;
}
}  // namespace

FiniteGroup FiniteGroup::dicyclic(int n) {
  if (n < 2) throw std::invalid_argument("dicyclic(n) requires n >= 2");
  FiniteGroup G;
  G.family_ = Family::Dicyclic;
  G.n_ = n;
  int m = 2 * n, N = 4 * n;
  G.table_.assign(N, std::vector<int>(N));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      int e1 = a / m, k1 = a % m, e2 = b / m, k2 = b % m;
      // s^e1 r^k1 * s^e2 r^k2, using r^k s = s r^{-k} and s^2 = r^n
      if (e2 == 0) G.table_[a][b] = dic_idx(n, e1, k1 + k2);
      else if (e1 == 0) G.table_[a][b] = dic_idx(n, 1, k2 - k1);
      else G.table_[a][b] = dic_idx(n, 0, n + k2 - k1);
    }
  G.names_.resize(N);
  for (int a = 0; a < N; ++a) {
    int e1 = a / m, k1 = a % m;
    std::string w;
    if (e1) w = "s";
    if (k1) {
      if (!w.empty()) w += "*";
      w += (k1 == 1) ? "r" : "r^" + std::to_string(k1);
    }
    G.names_[a] = w.empty() ? "e" : w;
  }
  G.gens_ = {{"r", dic_idx(n, 0, 1)}, {"s", dic_idx(n, 1, 0)}};
  G.finish_tables();
  return G;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic(n) requires n >= 1");
  FiniteGroup G;
  G.family_ = Family::Cyclic;
  G.n_ = n;
  G.table_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G.table_[a][b] = (a + b) % n;
  G.names_.resize(n);
  for (int a = 0; a < n; ++a) G.names_[a] = a == 0 ? "e" : (a == 1 ? "r" : "r^" + std::to_string(a));
  G.gens_ = {{"r", n > 1 ? 1 : 0}};
  G.finish_tables();
  return G;
}

FiniteGroup FiniteGroup::symmetric3() {
  FiniteGroup G;
  G.family_ = Family::Symmetric3;
  G.n_ = 3;
  G.table_.assign(6, std::vector<int>(6));
  auto idx = [](int eps, int k) { return eps * 3 + ((k % 3) + 3) % 3; };
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int e1 = a / 3, k1 = a % 3, e2 = b / 3, k2 = b % 3;
      // r^k s = s r^{-k}, s^2 = e
      if (e2 == 0) G.table_[a][b] = idx(e1, k1 + k2);
      else if (e1 == 0) G.table_[a][b] = idx(1, k2 - k1);
      else G.table_[a][b] = idx(0, k2 - k1);
    }
  G.names_ = {"e", "r", "r^2", "s", "s*r", "s*r^2"};
  G.gens_ = {{"r", 1}, {"s", 3}};
  G.finish_tables();
  return G;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> names,
                                    std::vector<std::pair<std::string, int>> generators) {
  FiniteGroup G;
  G.family_ = Family::Generic;
  G.table_ = std::move(table);
  G.names_ = std::move(names);
  G.gens_ = std::move(generators);
  size_t N = G.table_.size();
  if (G.names_.size() != N) throw std::invalid_argument("from_table: name count mismatch");
  // sanity: row 0 must be the identity row
  for (size_t b = 0; b < N; ++b)
    if (G.table_[0][b] != static_cast<int>(b)) throw std::invalid_argument("from_table: element 0 is not the identity");
  G.finish_tables();
  return G;
}

void FiniteGroup::finish_tables() {
  int N = order();
  inv_.assign(N, -1);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (table_[a][b] == 0) inv_[a] = b;
  for (int a = 0; a < N; ++a)
    if (inv_[a] < 0) throw std::invalid_argument("multiplication table has no inverse for some element");
}

int FiniteGroup::power(int a, long e) const {
  if (e < 0) return power(inverse(a), -e);
  int acc = 0, base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int FiniteGroup::generator(const std::string& gname) const {
  for (const auto& [nm, g] : gens_)
    if (nm == gname) return g;
  throw std::invalid_argument("no generator named " + gname);
}

int FiniteGroup::parse_element(const std::string& word) const {
  int acc = 0;
  size_t pos = 0;
  auto skip = [&] { while (pos < word.size() && word[pos] == ' ') ++pos; };
  skip();
  bool first = true;
  while (pos < word.size()) {
    if (!first) {
      if (word[pos] != '*') throw std::invalid_argument("expected '*' in group word: " + word);
      ++pos;
      skip();
    }
    size_t start = pos;
    while (pos < word.size() && (std::isalnum(static_cast<unsigned char>(word[pos])) || word[pos] == '_')) ++pos;
    std::string tok = word.substr(start, pos - start);
    if (tok.empty()) throw std::invalid_argument("bad group word: " + word);
    long e = 1;
    skip();
    if (pos < word.size() && word[pos] == '^') {
      ++pos;
      skip();
      bool neg = pos < word.size() && word[pos] == '-';
      if (neg) ++pos;
      size_t ds = pos;
      while (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos]))) ++pos;
      if (ds == pos) throw std::invalid_argument("bad exponent in group word: " + word);
      e = std::stol(word.substr(ds, pos - ds));
      if (neg) e = -e;
    }
    int g = tok == "e" ? 0 : generator(tok);
    acc = mul(acc, power(g, e));
    skip();
    first = false;
  }
  return acc;
}

ConjClass FiniteGroup::make_class(int rep, const std::vector<int>& transversal) const {
  ConjClass c;
  c.rep = rep;
  int N = order();
  std::set<int> mem;
  for (int g = 0; g < N; ++g) mem.insert(conj(rep, g));
  c.members.assign(mem.begin(), mem.end());
  for (int g = 0; g < N; ++g)
    if (mul(g, rep) == mul(rep, g)) c.centralizer.push_back(g);
  c.transversal = transversal;
  if (c.members.size() * c.centralizer.size() != static_cast<size_t>(N))
    throw std::logic_error("class/centralizer size mismatch");
  if (c.transversal.size() * c.centralizer.size() != static_cast<size_t>(N))
    throw std::logic_error("transversal has wrong size");
  c.centralizer_is_whole_group = c.centralizer.size() == static_cast<size_t>(N);

  std::set<int> cent(c.centralizer.begin(), c.centralizer.end());
  c.coset_index.assign(N, -1);
  c.coset_cofactor.assign(N, -1);
  for (int g = 0; g < N; ++g)
    for (size_t j = 0; j < c.transversal.size(); ++j) {
      int co = mul(g, inverse(c.transversal[j]));
      if (cent.count(co)) {
        if (c.coset_index[g] != -1) throw std::logic_error("transversal cosets overlap");
        c.coset_index[g] = static_cast<int>(j);
        c.coset_cofactor[g] = co;
      }
    }
  for (int g = 0; g < N; ++g)
    if (c.coset_index[g] < 0) throw std::logic_error("transversal does not cover the group");
  return c;
}

const std::vector<ConjClass>& FiniteGroup::conjugacy_classes() const {
  if (classes_.empty()) build_classes();
  return classes_;
}

void FiniteGroup::build_classes() const {
  std::vector<ConjClass> out;
  auto set_cyclic = [&](ConjClass& c, int gen) {
    c.centralizer_gen = gen;
    int t = 0, g = 0;
    c.dlog.assign(order(), -1);
    do {
      c.dlog[g] = t;
      g = mul(g, gen);
      ++t;
    } while (g != 0);
    c.centralizer_order = t;
    if (static_cast<size_t>(t) != c.centralizer.size() && !c.centralizer_is_whole_group)
      throw std::logic_error("designated centralizer generator does not generate");
  };

  if (family_ == Family::Dicyclic) {
    int n = n_;
    int r = generator("r"), s = generator("s"), sr = mul(s, r);
    std::vector<int> tr_e = {0};
    std::vector<int> tr_rk = {0, s};
    std::vector<int> tr_s;
    for (int k = 0; k < n; ++k) tr_s.push_back(power(r, k));
    // Table 2 uses {e, s} for the [sr] class of the quaternion group.
    std::vector<int> tr_sr = (n == 2) ? std::vector<int>{0, s} : tr_s;

    out.push_back(make_class(0, tr_e));
    out.push_back(make_class(power(r, n), tr_e));
    for (int k = 1; k < n; ++k) {
      ConjClass c = make_class(power(r, k), tr_rk);
      set_cyclic(c, r);
      out.push_back(std::move(c));
    }
    {
      ConjClass c = make_class(s, tr_s);
      set_cyclic(c, s);
      out.push_back(std::move(c));
    }
    {
      ConjClass c = make_class(sr, tr_sr);
      set_cyclic(c, sr);
      out.push_back(std::move(c));
    }
  } else if (family_ == Family::Cyclic) {
    for (int a = 0; a < order(); ++a) {
      ConjClass c = make_class(a, {0});
      if (order() > 1) set_cyclic(c, generator("r"));
      else { c.centralizer_gen = 0; c.centralizer_order = 1; c.dlog.assign(1, 0); }
      out.push_back(std::move(c));
    }
  } else if (family_ == Family::Symmetric3) {
    int r = generator("r"), s = generator("s");
    out.push_back(make_class(0, {0}));
    {
      ConjClass c = make_class(r, {0, s});
      set_cyclic(c, r);
      out.push_back(std::move(c));
    }
    {
      // Coset order {e, r^2, r} so the basis grades come out s, s*r, s*r^2.
      ConjClass c = make_class(s, {0, mul(r, r), r});
      set_cyclic(c, s);
      out.push_back(std::move(c));
    }
  } else {
    std::vector<bool> seen(order(), false);
    for (int a = 0; a < order(); ++a) {
      if (seen[a]) continue;
      std::set<int> mem;
      for (int g = 0; g < order(); ++g) mem.insert(conj(a, g));
      for (int x : mem) seen[x] = true;
      std::vector<int> cent;
      for (int g = 0; g < order(); ++g)
        if (mul(g, a) == mul(a, g)) cent.push_back(g);
      std::set<int> cset(cent.begin(), cent.end());
      std::vector<int> tr;
      std::vector<bool> covered(order(), false);
      for (int g = 0; g < order(); ++g) {
        if (covered[g]) continue;
        tr.push_back(g);
        for (int cc : cent) covered[mul(cc, g)] = true;
      }
      ConjClass c = make_class(a, tr);
      // designated generator if the centralizer happens to be cyclic
      c.centralizer_gen = -1;
      for (int g : cent) {
        int t = 1, x = g;
        while (x != 0) { x = mul(x, g); ++t; }
        if (static_cast<size_t>(t) == cent.size()) { set_cyclic(c, g); break; }
      }
      out.push_back(std::move(c));
    }
  }
  classes_ = std::move(out);
}

Irrep FiniteGroup::irrep_from_generators(const std::string& name,
                                         const std::vector<Mat>& gen_mats) const {
  Irrep ir;
  ir.name = name;
  ir.dim = static_cast<int>(gen_mats.empty() ? 1 : gen_mats[0].size());
  ir.elt_matrix.assign(order(), Mat{});
  ir.elt_matrix[0] = mat_identity(ir.dim);
  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int g : frontier)
      for (size_t gi = 0; gi < gens_.size(); ++gi) {
        int h = mul(g, gens_[gi].second);
        if (!ir.elt_matrix[h].empty()) continue;
        ir.elt_matrix[h] = mat_mul(ir.elt_matrix[g], gen_mats[gi]);
        next.push_back(h);
      }
    frontier = std::move(next);
  }
  for (int g = 0; g < order(); ++g)
    if (ir.elt_matrix[g].empty()) throw std::logic_error("generators do not generate the group");
  for (const ConjClass& c : conjugacy_classes()) ir.char_on_class.push_back(ir.character(c.rep));
  return ir;
}

const std::vector<Irrep>& FiniteGroup::irreps() const {
  if (irreps_.empty()) build_irreps();
  return irreps_;
}

void FiniteGroup::build_irreps() const {
  std::vector<Irrep> out;
  auto one = [](const Cyclotomic& v) { return Mat{{v}}; };

  if (family_ == Family::Cyclic) {
    int n = n_;
    for (int j = 0; j < n; ++j)
      out.push_back(irrep_from_generators("chi" + std::to_string(j), {one(Cyclotomic::root(n, j))}));
  } else if (family_ == Family::Dicyclic) {
    int n = n_;
    Cyclotomic iota = (n % 2 == 0) ? Cyclotomic(1) : Cyclotomic::imag();
    out.push_back(irrep_from_generators("psi0", {one(1), one(1)}));
    out.push_back(irrep_from_generators("psi1", {one(1), one(-1)}));
    out.push_back(irrep_from_generators("psi2", {one(-1), one(iota)}));
    out.push_back(irrep_from_generators("psi3", {one(-1), one(-iota)}));
    if (n == 2) {
      // basis of Table 3: r acts by rotation, s diagonally
      Mat mr = {{Cyclotomic(0), Cyclotomic(1)}, {Cyclotomic(-1), Cyclotomic(0)}};
      Mat ms = {{Cyclotomic::imag(), Cyclotomic(0)}, {Cyclotomic(0), -Cyclotomic::imag()}};
      out.push_back(irrep_from_generators("chi", {mr, ms}));
    } else {
      // chi with r-eigenvalues zeta_{2n}^{+-i}; for n = 4 they are listed in
      // exponent order 2, 3, 1 so the module numbering of the order-16 double
      // comes out right.
      std::vector<int> exps;
      if (n == 4) exps = {2, 3, 1};
      else for (int i = 1; i < n; ++i) exps.push_back(i);
      int pos = 0;
      for (int i : exps) {
        Cyclotomic w = Cyclotomic::root(2 * n, i);
        Cyclotomic eps((i % 2 == 0) ? 1 : -1);
        Mat mr = {{w, Cyclotomic(0)}, {Cyclotomic(0), w.inv()}};
        Mat ms = {{Cyclotomic(0), eps}, {Cyclotomic(1), Cyclotomic(0)}};
        out.push_back(irrep_from_generators("chi" + std::to_string(pos + 1), {mr, ms}));
        ++pos;
      }
    }
  } else if (family_ == Family::Symmetric3) {
    out.push_back(irrep_from_generators("psi0", {one(1), one(1)}));
    out.push_back(irrep_from_generators("psi1", {one(1), one(-1)}));
    Cyclotomic z = Cyclotomic::root(3, 1);
    Mat mr = {{z, Cyclotomic(0)}, {Cyclotomic(0), z * z}};
    Mat ms = {{Cyclotomic(0), Cyclotomic(1)}, {Cyclotomic(1), Cyclotomic(0)}};
    out.push_back(irrep_from_generators("chi", {mr, ms}));
  } else {
    throw std::domain_error("irreps unavailable for the generic group backend");
  }
  irreps_ = std::move(out);
}

std::string FiniteGroup::label() const {
  switch (family_) {
    case Family::Dicyclic: return "dicyclic:" + std::to_string(n_);
    case Family::Cyclic: return "cyclic:" + std::to_string(n_);
    case Family::Symmetric3: return "s3";
    default: return "generic:" + std::to_string(order());
  }
}

}  // namespace qd
