#pragma once

#include "qd/linalg.hpp"

#include <string>
#include <vector>

namespace qd {

/// One conjugacy class with the data the Drinfeld-double construction needs:
/// a representative, the centralizer, and a fixed right transversal
/// {g_i} of C_G(a) in G.  Representatives and transversal orders follow the
/// featured families so induced-module bases come out in the standard form.
struct ConjClass {
  int rep = 0;
  std::vector<int> members;
  std::vector<int> centralizer;  // element list, first is identity
  std::vector<int> transversal;  // right coset representatives, fixed order

  bool centralizer_is_whole_group = false;
  int centralizer_gen = 0;    // generator when the centralizer is cyclic
  int centralizer_order = 0;  // its order when cyclic

  // For g in G: g = c * g_j with c in the centralizer.
  std::vector<int> coset_index;    // j, per group element
  std::vector<int> coset_cofactor; // c, per group element
  std::vector<int> dlog;           // t with centralizer_gen^t = g (cyclic case), else -1
};

/// An irreducible representation given by explicit matrices over Cyclotomic
/// for every group element (right action, row convention: v -> v M).
struct Irrep {
  std::string name;
  int dim = 1;
  std::vector<Mat> elt_matrix;            // indexed by group element
  std::vector<Cyclotomic> char_on_class;  // indexed by conjugacy class

  Cyclotomic character(int g) const {
    Cyclotomic t(0);
    for (int i = 0; i < dim; ++i) t += elt_matrix[g][i][i];
    return t;
  }
};

/// Finite group backed by a multiplication table, with named generators and
/// element normal forms.  Built-in families carry conjugacy data and
/// built-in irreducible representations for the supported families; a generic
/// table-backed group supports everything except irreps.
class FiniteGroup {
 public:
  enum class Family { Generic, Cyclic, Dicyclic, Symmetric3 };

  /// Dicyclic group of order 4n, <s, r | r^{2n} = e, s^2 = r^n, rsrs^{-1} = e>.
  /// Elements are normal forms s^eps r^k; n >= 2 required.
  static FiniteGroup dicyclic(int n);
  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric3();
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::vector<std::string> names,
                                std::vector<std::pair<std::string, int>> generators);

  Family family() const { return family_; }
  int family_n() const { return n_; }
  int order() const { return static_cast<int>(table_.size()); }
  int id() const { return 0; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inv_[a]; }
  int conj(int a, int g) const { return mul(mul(inverse(g), a), g); }  // a^g = g^{-1} a g
  int power(int a, long e) const;

  const std::string& name(int a) const { return names_[a]; }
  int parse_element(const std::string& word) const;
  const std::vector<std::pair<std::string, int>>& generators() const { return gens_; }
  int generator(const std::string& gname) const;

  const std::vector<ConjClass>& conjugacy_classes() const;
  /// Complete list of irreducibles; throws for the generic backend.
  const std::vector<Irrep>& irreps() const;

  std::string label() const;  // "dicyclic:2", "s3", "cyclic:4"

 private:
  Family family_ = Family::Generic;
  int n_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
  std::vector<std::pair<std::string, int>> gens_;
  mutable std::vector<ConjClass> classes_;
  mutable std::vector<Irrep> irreps_;

  void finish_tables();
  void build_classes() const;
  void build_irreps() const;
  ConjClass make_class(int rep, const std::vector<int>& transversal) const;
  Irrep irrep_from_generators(const std::string& name,
                              const std::vector<Mat>& gen_mats) const;
};

}  // namespace qd
