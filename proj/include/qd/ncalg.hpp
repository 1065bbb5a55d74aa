#pragma once

#include "qd/drinfeld.hpp"
#include "qd/freealg.hpp"

#include <memory>
#include <optional>

namespace qd {

/// D(G)-module structure on the degree-1 part of a presentation: each
/// generator is a basis vector of one summand of a direct sum of simples.
struct HopfAction {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<SimpleDoubleModule> summands;
  std::vector<std::pair<int, int>> slot;  // generator -> (summand, basis vector)

  int grade(int gen) const { return summands[slot[gen].first].grade[slot[gen].second]; }
  /// Action of the group element h on the degree-1 span (row convention).
  Mat degree1_matrix(int h) const;
};

/// Quadratic presentation of a connected graded algebra, generators ordered by
/// the term order (index 0 largest).
struct AlgebraPresentation {
  std::vector<std::string> gen_names;
  std::vector<int> gen_grade;                // group grading; empty when absent
  std::shared_ptr<const FiniteGroup> group;  // set when gen_grade is
  std::vector<NcPoly> relations;
  std::optional<HopfAction> action;
  int expected_gkdim = 0;

  int gen_count() const { return static_cast<int>(gen_names.size()); }
  /// Ordered product of the letter grades of a word.
  int word_grade(const Word& w) const;
  NcPoly parse(const std::string& s) const { return poly_parse(s, gen_names); }
  std::string str(const NcPoly& p) const { return poly_str(p, gen_names); }
};

/// Degree-truncated reduced Groebner basis: every S-polynomial whose overlap
/// word has degree <= degree_bound reduces to zero.
struct GroebnerBasis {
  std::vector<NcPoly> elems;  // monic, tails reduced, sorted by lead word
  int degree_bound = 0;
};

GroebnerBasis groebner(const AlgebraPresentation& pres, int degree_bound);
NcPoly normal_form(NcPoly p, const GroebnerBasis& gb);

/// Dimensions of the graded pieces 0..d, counted as lead-word-avoiding words.
std::vector<long> hilbert_from_gb(const GroebnerBasis& gb, int gens, int d);
std::vector<long> hilbert_coeffs(const AlgebraPresentation& pres, int d);

/// True iff p, q are nonzero mod gb but p*q is zero.  Throws when the basis
/// degree bound cannot certify the product.
bool zero_divisor_witness(const NcPoly& p, const NcPoly& q, const GroebnerBasis& gb);

/// Degree-d monomial basis in PBW form (ascending generator order per word),
/// valid when the normal words are exactly sorted words; throws otherwise.
std::vector<Word> pbw_monomials(const AlgebraPresentation& pres, const GroebnerBasis& gb, int d);

/// Span of the relations is a D(G)-submodule of V (x) V.
bool relation_submodule_check(const AlgebraPresentation& pres);

/// Image of p under the group element h acting letterwise through the Hopf
/// action (the automorphism induced on tensor words; no reduction).
NcPoly apply_group_free(const AlgebraPresentation& pres, int h, const NcPoly& p);
/// Same, reduced to normal form.
NcPoly apply_group_nf(const AlgebraPresentation& pres, const GroebnerBasis& gb, int h,
                      const NcPoly& p);
/// Terms of p whose word grade equals g.
NcPoly grade_component(const AlgebraPresentation& pres, const NcPoly& p, int g);

/// Fast normal forms for presentations whose reduced quadratic basis consists
/// of two-term rewrites (a b) -> scale * (c d): every monomial stays a scalar
/// multiple of a single normal word.
class MonomialRules {
 public:
  static std::optional<MonomialRules> from_gb(const GroebnerBasis& gb, int gens);
  /// Scalar and normal word of an arbitrary input word.
  std::pair<Cyclotomic, Word> nf(Word w) const;

 private:
  int m_ = 0;
  struct R {
    bool present = false;
    char c = 0, d = 0;
    Cyclotomic scale;
  };
  std::vector<R> table_;
};

/// Parameters of the built-in algebra families.
struct FamilyParams {
  int alpha = 1, beta = 1, gamma = 1;           // in {+1, -1}
  Cyclotomic u1{1}, u2{1}, u3{1}, u4{1};        // nonzero
};

/// Six generators x1,x2,y1,y2,z1,z2 with fifteen relations; D(D_4) acts with
/// degree-1 part V17 + V20 + V21.
AlgebraPresentation d4_algebra(const FamilyParams& p);
/// Eight generators x1..x4,y1,y2,z1,z2 with twenty-eight relations over D(D_8).
AlgebraPresentation d8_algebra(const FamilyParams& p);
/// Three-generator quadratic candidates over D(S_3); the partner summand of
/// V0 inside V6 (x) V6 picks the relation set (2, 3, 4 or 5).
AlgebraPresentation s3_candidate(int second_summand);

}  // namespace qd
