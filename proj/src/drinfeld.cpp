#include "qd/drinfeld.hpp"

#include <stdexcept>

namespace qd {

void de_add(DoubleElement& into, const DoubleBasisElt& b, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = into.find(b);
  if (it == into.end()) {
    into.emplace(b, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

DoubleElement d_mul(const FiniteGroup& G, const DoubleBasisElt& x, const DoubleBasisElt& y) {
  DoubleElement out;
  if (x.g == G.conj(y.g, G.inverse(x.h)))  // g = h g' h^{-1}
    de_add(out, DoubleBasisElt{x.g, G.mul(x.h, y.h)}, Cyclotomic(1));
  return out;
}

std::vector<std::pair<DoubleBasisElt, DoubleBasisElt>> d_coproduct(const FiniteGroup& G,
                                                                   const DoubleBasisElt& x) {
  std::vector<std::pair<DoubleBasisElt, DoubleBasisElt>> out;
  out.reserve(G.order());
  for (int a = 0; a < G.order(); ++a)
    out.push_back({DoubleBasisElt{a, x.h}, DoubleBasisElt{G.mul(G.inverse(a), x.g), x.h}});
  return out;
}

Cyclotomic d_counit(const FiniteGroup&, const DoubleBasisElt& x) {
  return Cyclotomic(x.g == 0 ? 1 : 0);
}

DoubleBasisElt d_antipode(const FiniteGroup& G, const DoubleBasisElt& x) {
  int hinv = G.inverse(x.h);
  return DoubleBasisElt{G.conj(G.inverse(x.g), x.h), hinv};
}

std::string d_basis_str(const FiniteGroup& G, const DoubleBasisElt& x) {
  return "phi[" + G.name(x.g) + "]*" + G.name(x.h);
}

Vec SimpleDoubleModule::act(int basis_index, const DoubleBasisElt& xh) const {
  if (grade[basis_index] != xh.g) return Vec(dim, Cyclotomic(0));
  return group_action[xh.h][basis_index];
}

Cyclotomic SimpleDoubleModule::character(const DoubleBasisElt& gh) const {
  Cyclotomic t(0);
  for (int i = 0; i < dim; ++i)
    if (grade[i] == gh.g) t += group_action[gh.h][i][i];
  return t;
}

std::vector<SimpleDoubleModule> simples(const FiniteGroup& G) {
  std::vector<SimpleDoubleModule> out;
  const auto& classes = G.conjugacy_classes();
  for (size_t ci = 0; ci < classes.size(); ++ci) {
    const ConjClass& cls = classes[ci];
    int tcount = static_cast<int>(cls.transversal.size());

    // The centralizer's irreducibles: the whole group's list, or the characters
    // of the designated cyclic generator.
    struct CentIrrep {
      std::string name;
      int dim;
      // matrix of a centralizer element c
      std::function<Mat(int)> of;
      std::function<Cyclotomic(int)> chr;
    };
    std::vector<CentIrrep> cirreps;
    if (cls.centralizer_is_whole_group) {
      for (const Irrep& ir : G.irreps()) {
        CentIrrep ci2;
        ci2.name = ir.name;
        ci2.dim = ir.dim;
        ci2.of = [&ir](int c) { return ir.elt_matrix[c]; };
        ci2.chr = [&ir](int c) { return ir.character(c); };
        cirreps.push_back(std::move(ci2));
      }
    } else {
      if (cls.centralizer_gen < 0)
        throw std::domain_error("irreps unavailable: centralizer is not cyclic and not the whole group");
      int m = cls.centralizer_order;
      for (int j = 0; j < m; ++j) {
        CentIrrep ci2;
        ci2.name = "chi" + std::to_string(j);
        ci2.dim = 1;
        const std::vector<int>& dlog = cls.dlog;
        ci2.of = [m, j, &dlog](int c) {
          return Mat{{Cyclotomic::root(m, static_cast<long>(j) * dlog[c])}};
        };
        ci2.chr = [m, j, &dlog](int c) {
          return Cyclotomic::root(m, static_cast<long>(j) * dlog[c]);
        };
        cirreps.push_back(std::move(ci2));
      }
    }

    for (size_t ii = 0; ii < cirreps.size(); ++ii) {
      const CentIrrep& chi = cirreps[ii];
      SimpleDoubleModule M;
      M.index = static_cast<int>(out.size());
      M.class_index = static_cast<int>(ci);
      M.irrep_index = static_cast<int>(ii);
      M.irrep_name = chi.name;
      M.rep = cls.rep;
      M.dim = chi.dim * tcount;
      M.label = "(" + G.name(cls.rep) + ", " + chi.name + ")";
      M.grade.resize(M.dim);
      for (int j = 0; j < tcount; ++j) {
        int gr = G.conj(cls.rep, cls.transversal[j]);
        for (int w = 0; w < chi.dim; ++w) M.grade[j * chi.dim + w] = gr;
      }
      M.cent_char.assign(G.order(), Cyclotomic(0));
      for (int c : cls.centralizer) M.cent_char[c] = chi.chr(c);
      // (v (x) g_j) . h = v.c (x) g_{j'} with g_j h = c g_{j'}
      M.group_action.assign(G.order(), Mat(M.dim, Vec(M.dim, Cyclotomic(0))));
      for (int h = 0; h < G.order(); ++h) {
        Mat& A = M.group_action[h];
        for (int j = 0; j < tcount; ++j) {
          int gjh = G.mul(cls.transversal[j], h);
          int jp = cls.coset_index[gjh];
          int c = cls.coset_cofactor[gjh];
          Mat mc = chi.of(c);
          for (int w = 0; w < chi.dim; ++w)
            for (int w2 = 0; w2 < chi.dim; ++w2)
              A[j * chi.dim + w][jp * chi.dim + w2] = mc[w][w2];
        }
      }
      out.push_back(std::move(M));
    }
  }
  return out;
}

}  // namespace qd
