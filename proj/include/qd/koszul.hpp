#pragma once

#include "qd/ncalg.hpp"

namespace qd {

/// Quadratic dual T(V*)/<I-perp>: generators carry primed names, relations are
/// a canonical basis of the annihilator of the relation span.
AlgebraPresentation quadratic_dual(const AlgebraPresentation& pres);

/// Dual data needed by the superpotential and Nakayama computations.
struct KoszulData {
  AlgebraPresentation dual;
  GroebnerBasis dual_gb;      // complete to degree n
  int n = 0;                  // number of generators = top degree
  long top_dim = 0;           // dim of the dual's degree-n part
  Word theta;                 // chosen monomial spanning it (when top_dim == 1)
  NcPoly theta_nf;            // its normal form
  std::vector<long> dual_dims;  // 0..n
};

KoszulData koszul_analyze(const AlgebraPresentation& pres);

/// Coefficient c with NF(word) = c * theta in the dual's top degree.
Cyclotomic theta_coefficient(const KoszulData& kd, const Word& dual_word);

struct Superpotential {
  NcPoly w;     // degree-n element of the free algebra on B's generators
  Word theta;
  bool grade_trivial = false;  // every monomial has identity group grade
};

/// w = sum Phi(x*_{j1},...,x*_{jn}) x_{j1}...x_{jn}, normalized so the lead
/// coefficient is one.  Requires top_dim == 1.
Superpotential superpotential(const AlgebraPresentation& pres, const KoszulData& kd);

struct HdetReport {
  bool grade_trivial = false;
  std::vector<std::pair<std::string, Cyclotomic>> values;  // per group generator
};

/// Action of the group generators on the span of w; w must be an eigenvector.
HdetReport hdet(const AlgebraPresentation& pres, const Superpotential& sp);

/// Nakayama automorphism on the degree-1 part of B: mu = (-1)^{n-1} nu where
/// nu is the Frobenius-form Nakayama of B^! on degree 1 (<a,b> = <b,nu(a)>).
/// The sign convention was calibrated once on the D4 family.
Mat nakayama(const KoszulData& kd);

/// Iterated left partial derivatives of w down to degree 2 (prefix coefficient
/// extraction); for the featured algebras their span is the relation space.
Mat derivation_quotient_span(const AlgebraPresentation& pres, const Superpotential& sp);

}  // namespace qd
