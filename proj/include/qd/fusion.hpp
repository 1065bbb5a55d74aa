#pragma once

#include "qd/drinfeld.hpp"

namespace qd {

/// A finite-dimensional right D(G)-module presented concretely: a G-grading of
/// the basis and the action matrices of the group part.  phi_x h then acts on
/// basis vector i as [grade(i) == x] * (row i of group_action[h]).
struct Module {
  int dim = 0;
  std::vector<int> grade;
  std::vector<Mat> group_action;  // per group element

  Vec act(int i, const DoubleBasisElt& xh) const {
    if (grade[i] != xh.g) return Vec(dim, Cyclotomic(0));
    return group_action[xh.h][i];
  }
  Cyclotomic character(const DoubleBasisElt& gh) const {
    Cyclotomic t(0);
    for (int i = 0; i < dim; ++i)
      if (grade[i] == gh.g) t += group_action[gh.h][i][i];
    return t;
  }
};

Module as_module(const SimpleDoubleModule& s);

/// Tensor product along the coproduct: grades multiply, the group part acts
/// diagonally.  Basis is row-major over the factors.
Module tensor(const FiniteGroup& G, const Module& a, const Module& b);
Module direct_sum(const Module& a, const Module& b);

/// One copy of a simple inside a bigger module: the images of all of the
/// simple's basis vectors, as rows in the big module's coordinates.
struct CopyImage {
  int simple_index = 0;
  Mat images;  // dim(simple) rows
};

struct Decomposition {
  std::vector<int> multiplicity;   // per simple index
  std::vector<CopyImage> copies;   // grouped by simple index, ascending
};

/// Exact decomposition by solving the intertwiner equations Hom_{D(G)}(S, W).
/// Each copy is normalized so the first nonzero coordinate of the image of the
/// simple's first basis vector is 1.
Decomposition decompose(const FiniteGroup& G, const std::vector<SimpleDoubleModule>& simp,
                        const Module& W);

/// Intertwiner images of one simple only (the nullspace basis, normalized).
std::vector<CopyImage> hom_copies(const FiniteGroup& G, const SimpleDoubleModule& S,
                                  const Module& W);

/// S-matrix of the modular category of D(G)-modules,
/// S[(a,chi),(b,chi')] = 1/(|C(a)||C(b)|) sum conj(chi(g b g^{-1})) conj(chi'(g^{-1} a g))
/// over {g : a g b g^{-1} = g b g^{-1} a}.
Mat s_matrix(const FiniteGroup& G, const std::vector<SimpleDoubleModule>& simp);

/// Verlinde multiplicity N_{ab}^c from a precomputed S-matrix.
/// Throws std::logic_error when the value is not a nonnegative integer.
long verlinde(const Mat& S, int a, int b, int c);

/// Linear combination of copies of the same simple, per Lemma-style embeddings
/// W -> W^{(+)n}; coords must not be all zero.
CopyImage copy_select(const std::vector<CopyImage>& copies, const Vec& coords);

}  // namespace qd
