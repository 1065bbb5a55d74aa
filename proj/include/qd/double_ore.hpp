#pragma once

#include "qd/ncalg.hpp"

#include <array>

namespace qd {

/// Skew polynomial ring k_q[x_1..x_n]: relations x_j x_i = q_{ji} x_i x_j.
/// q must be multiplicatively skew-symmetric (q_ii = 1, q_ij q_ji = 1).
AlgebraPresentation skew_poly(const Mat& q, std::vector<std::string> names,
                              std::vector<int> grades = {},
                              std::shared_ptr<const FiniteGroup> group = nullptr);

bool skew_matrix_ok(const Mat& q);

/// Data of a trimmed graded double Ore extension A_p[X1, X2; sigma]:
/// sigma : A -> M_2(A) with degree-1 entries, and the scalar p (p11 = 0).
struct DOEData {
  AlgebraPresentation base;
  GroebnerBasis base_gb;
  // per base generator: entries (11, 12, 21, 22), each a linear form in A_1
  std::vector<std::array<NcPoly, 4>> sigma;
  Cyclotomic p;
};

/// sigma respects every relation of A after substitution.
bool sigma_is_algebra_map(const DOEData& d);

/// There is an algebra map phi with phi sigma = sigma phi = diag(Id, Id) on A_1.
bool sigma_invertible(const DOEData& d);

/// The three compatibility conditions on every generator of A.  When every
/// sigma(r) is diagonal or every sigma(r) is skew-diagonal, the reduction to a
/// commutation check is exercised as well and must agree.
bool do_conditions(const DOEData& d);

/// The shortcut check alone; empty when neither shape applies.
std::optional<bool> do_conditions_shortcut(const DOEData& d);

/// The extension presentation: A's relations, X1 X2 - p X2 X1, and the rows of
/// (X1; X2) r = sigma(r) (X1; X2).  final_order lists tokens -1 (X1), -2 (X2)
/// and k >= 0 (base generator k) in the desired term order; empty means the
/// new generators come first.  Throws unless do_conditions holds.
AlgebraPresentation build_double_ore(const DOEData& d, const std::string& x1_name,
                                     const std::string& x2_name, int x1_grade, int x2_grade,
                                     std::vector<int> final_order = {});

/// Double Ore data presenting the D4 family: A = k_q[y1,y2,z1,z2], p = alpha.
DOEData d4_doe_data(const FamilyParams& p);

/// The three stages for D(D_8): C1 = (-1)-skew plane <x1,x3>, then adjoin
/// (x2,x4), (y1,y2), (z1,z2).
struct D8Stages {
  DOEData stage1, stage2, stage3;
  AlgebraPresentation c2, c3, full;  // the successive extensions
};
D8Stages d8_doe_stages(const FamilyParams& p);

/// Relation spans agree in degree 2 (same canonical row space).
bool same_quadratic_ideal(const AlgebraPresentation& a, const AlgebraPresentation& b);

}  // namespace qd
