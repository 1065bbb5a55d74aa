#pragma once

#include "qd/group.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qd {

/// Basis element phi_g h of the Drinfeld double D(G) = (kG)* # kG.
struct DoubleBasisElt {
  int g = 0;
  int h = 0;
  friend bool operator==(const DoubleBasisElt&, const DoubleBasisElt&) = default;
  friend auto operator<=>(const DoubleBasisElt&, const DoubleBasisElt&) = default;
};

/// Finite linear combination of basis elements; zero coefficients are never stored.
using DoubleElement = std::map<DoubleBasisElt, Cyclotomic>;

void de_add(DoubleElement& into, const DoubleBasisElt& b, const Cyclotomic& c);

/// (phi_g h)(phi_g' h') = phi_g phi_{h g' h^{-1}} h h', nonzero iff g = h g' h^{-1}.
DoubleElement d_mul(const FiniteGroup& G, const DoubleBasisElt& x, const DoubleBasisElt& y);

/// Delta(phi_g h) = sum_x phi_x h (x) phi_{x^{-1} g} h; |G| tensor terms.
std::vector<std::pair<DoubleBasisElt, DoubleBasisElt>> d_coproduct(const FiniteGroup& G,
                                                                   const DoubleBasisElt& x);
Cyclotomic d_counit(const FiniteGroup& G, const DoubleBasisElt& x);
/// S(phi_g h) = phi_{h^{-1} g^{-1} h} h^{-1}.
DoubleBasisElt d_antipode(const FiniteGroup& G, const DoubleBasisElt& x);

std::string d_basis_str(const FiniteGroup& G, const DoubleBasisElt& x);

/// Simple right D(G)-module (a, chi): chi an irreducible of C_G(a), with basis
/// v (x) g_i over the fixed transversal, graded by a^{g_i}.
struct SimpleDoubleModule {
  int index = 0;              // position in the census numbering V_0, V_1, ...
  int class_index = 0;
  int irrep_index = 0;        // within the centralizer's irrep list
  std::string irrep_name;
  int rep = 0;                // class representative a
  int dim = 0;
  std::vector<int> grade;               // group element per basis vector
  std::vector<Mat> group_action;        // per group element h: v -> v . h
  std::vector<Cyclotomic> cent_char;    // chi on the centralizer, indexed by group element
                                        // (meaningful only on C_G(a))
  std::string label;                    // "(a, chi)"

  /// Row i of the action of phi_x h: zero unless grade[i] == x.
  Vec act(int basis_index, const DoubleBasisElt& xh) const;
  /// Trace of the action of phi_g h.
  Cyclotomic character(const DoubleBasisElt& gh) const;
};

/// All simple D(G)-modules in a fixed deterministic order: conjugacy
/// classes as listed by the group, then the centralizer's irreps in order.
std::vector<SimpleDoubleModule> simples(const FiniteGroup& G);

}  // namespace qd
