#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qd/koszul.hpp"

using namespace qd;

namespace {

AlgebraPresentation commutative(int n) {
  AlgebraPresentation A;
  for (int g = 0; g < n; ++g) A.gen_names.push_back(std::string(1, static_cast<char>('x' + g)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      A.relations.push_back(poly_term(Word{static_cast<char>(i), static_cast<char>(j)}) -
                            poly_term(Word{static_cast<char>(j), static_cast<char>(i)}));
  return A;
}

// w == sign * (mu (x) id^{n-1}) applied to the rotate-last-to-front shift of w
bool twisted_cyclic(const NcPoly& w, const Mat& mu, int sign) {
  NcPoly rhs;
  for (const auto& [word, c] : w.terms) {
    Word rest = word.substr(0, word.size() - 1);
    int k = static_cast<unsigned char>(word.back());
    for (size_t l = 0; l < mu.size(); ++l) {
      if (mu[k][l].is_zero()) continue;
      poly_add_term(rhs, Word(1, static_cast<char>(l)) + rest, mu[k][l] * c * Cyclotomic(sign));
    }
  }
  return rhs == w;
}

}  // namespace

TEST_CASE("quadratic duals") {
  AlgebraPresentation kxy = commutative(2);
  AlgebraPresentation dual = quadratic_dual(kxy);
  REQUIRE(dual.relations.size() == 3);
  // span equals the exterior-type relations x'^2, y'^2, x'y' + y'x'
  auto to_vec = [](const NcPoly& p) {
    Vec v(4, Cyclotomic(0));
    for (const auto& [w, c] : p.terms) v[static_cast<unsigned char>(w[0]) * 2 + static_cast<unsigned char>(w[1])] = c;
    return v;
  };
  Mat mine, want;
  for (const NcPoly& r : dual.relations) mine.push_back(to_vec(r));
  for (const char* rel : {"x'^2", "y'^2", "x'*y' + y'*x'"}) want.push_back(to_vec(dual.parse(rel)));
  rref(mine);
  rref(want);
  CHECK(mine == want);
  AlgebraPresentation ddual = quadratic_dual(dual);
  // double dual has the original relation span (up to scalar here)
  REQUIRE(ddual.relations.size() == 1);
  NcPoly orig = ddual.parse("x''*y'' - y''*x''");
  CHECK(ddual.relations[0] == orig.scaled(ddual.relations[0].lead_coeff() / orig.lead_coeff()));

  // free algebra: all four quadratic dual relations
  AlgebraPresentation free2;
  free2.gen_names = {"a", "b"};
  CHECK(quadratic_dual(free2).relations.size() == 4);

  // D4: 36 - 15 = 21 dual relations
  AlgebraPresentation B = d4_algebra(FamilyParams{});
  CHECK(quadratic_dual(B).relations.size() == 21);
}

TEST_CASE("dual tops") {
  AlgebraPresentation kxy = commutative(2);
  KoszulData kd = koszul_analyze(kxy);
  CHECK(kd.top_dim == 1);
  CHECK(kd.theta == Word({0, 1}));  // x'y'

  FamilyParams p;
  p.gamma = -1;
  KoszulData kd4 = koszul_analyze(d4_algebra(p));
  CHECK(kd4.top_dim == 1);
  CHECK(kd4.theta == Word({0, 1, 2, 3, 4, 5}));  // x1'x2'y1'y2'z1'z2'
  CHECK(kd4.dual_dims == std::vector<long>{1, 6, 15, 20, 15, 6, 1});

  KoszulData kd8 = koszul_analyze(d8_algebra(p));
  CHECK(kd8.top_dim == 1);
  CHECK(kd8.dual_dims == std::vector<long>{1, 8, 28, 56, 70, 56, 28, 8, 1});
}

TEST_CASE("superpotential for D4") {
  FamilyParams p;
  p.alpha = -1;
  p.beta = 1;
  p.gamma = -1;
  p.u1 = Cyclotomic(2);
  p.u3 = Cyclotomic::imag();
  AlgebraPresentation B = d4_algebra(p);
  KoszulData kd = koszul_analyze(B);
  Superpotential sp = superpotential(B, kd);

  CHECK(sp.grade_trivial);
  Cyclotomic bg(p.beta * p.gamma), abg(p.alpha * p.beta * p.gamma);
  CHECK(sp.w.coeff(B.parse("x1*x2*y1*y2*z1*z2").lead_word()) == Cyclotomic(1));
  CHECK(sp.w.coeff(B.parse("x1*x2*y2*y1*z2*z1").lead_word()) == bg);
  CHECK(sp.w.coeff(B.parse("x2*x1*y2*y1*z2*z1").lead_word()) == -abg);

  // derivation-quotient property: 4-fold left derivatives span the relations
  Mat derived = derivation_quotient_span(B, sp);
  Mat rel;
  for (const NcPoly& r : B.relations) {
    Vec v(36, Cyclotomic(0));
    for (const auto& [w, c] : r.terms)
      v[static_cast<unsigned char>(w[0]) * 6 + static_cast<unsigned char>(w[1])] = c;
    rel.push_back(std::move(v));
  }
  Mat a = derived, b = rel;
  rref(a);
  rref(b);
  CHECK(a == b);
}

TEST_CASE("hdet matches the expected values") {
  for (int mask = 0; mask < 8; ++mask) {
    FamilyParams p;
    p.alpha = (mask & 1) ? 1 : -1;
    p.beta = (mask & 2) ? 1 : -1;
    p.gamma = (mask & 4) ? 1 : -1;
    p.u1 = Cyclotomic::imag();
    p.u4 = Cyclotomic(2);
    AlgebraPresentation B = d4_algebra(p);
    Superpotential sp = superpotential(B, koszul_analyze(B));
    HdetReport rep = hdet(B, sp);
    CHECK(rep.grade_trivial);
    REQUIRE(rep.values.size() == 2);
    CHECK(rep.values[0].first == "r");
    CHECK(rep.values[0].second == Cyclotomic(-p.alpha * p.beta * p.gamma));
    CHECK(rep.values[1].first == "s");
    CHECK(rep.values[1].second == Cyclotomic(-p.beta * p.gamma));
    // a fourth root of unity on a group element of order four
    CHECK(rep.values[0].second.pow(4) == Cyclotomic(1));
  }
}

TEST_CASE("Nakayama automorphisms") {
  // commutative polynomial rings are Calabi-Yau
  CHECK(nakayama(koszul_analyze(commutative(2))) == mat_identity(2));
  CHECK(nakayama(koszul_analyze(commutative(3))) == mat_identity(3));

  FamilyParams p;
  p.alpha = -1;
  p.gamma = -1;
  p.u1 = Cyclotomic(2);
  p.u2 = Cyclotomic(3);
  p.u3 = Cyclotomic::imag();
  p.u4 = Cyclotomic(5);
  AlgebraPresentation B = d4_algebra(p);
  KoszulData kd = koszul_analyze(B);
  Mat mu = nakayama(kd);
  Cyclotomic b1 = Cyclotomic(-p.alpha) * p.u1.pow(-2) * p.u2.pow(-2);
  Cyclotomic b2 = Cyclotomic(-p.alpha * p.beta) * p.u1.pow(2) * p.u3.inv() * p.u4.inv();
  Cyclotomic b3 = Cyclotomic(p.alpha * p.gamma) * p.u2.pow(2) * p.u3 * p.u4;
  Mat want(6, Vec(6, Cyclotomic(0)));
  want[0][0] = want[1][1] = b1;
  want[2][2] = want[3][3] = b2;
  want[4][4] = want[5][5] = b3;
  CHECK(mu == want);
  CHECK(mat_det(mu) == Cyclotomic(1));

  // the defining twisted-cyclicity identity, sign (-1)^{n-1}
  Superpotential sp = superpotential(B, kd);
  CHECK(twisted_cyclic(sp.w, mu, -1));
  CHECK_FALSE(twisted_cyclic(sp.w, mu, 1));
}

TEST_CASE("Nakayama for D8: expected blocks, with the middle-block correction") {
  FamilyParams p;
  p.beta = -1;
  p.u1 = Cyclotomic(2);
  p.u2 = Cyclotomic(3);
  p.u3 = Cyclotomic(5);
  p.u4 = Cyclotomic(7);
  AlgebraPresentation B = d8_algebra(p);
  KoszulData kd = koszul_analyze(B);
  Mat mu = nakayama(kd);

  Cyclotomic c1 = Cyclotomic(p.beta * p.gamma) * p.u3.pow(2) * p.u4.pow(2);
  Cyclotomic c2_uncorrected = Cyclotomic(p.beta) * p.u1.inv() * p.u2.inv() * p.u3.pow(4);
  Cyclotomic c2 = Cyclotomic(p.beta) * p.u1 * p.u2 * p.u3.pow(-4);
  Cyclotomic c3 = Cyclotomic(-p.gamma) * p.u1.inv() * p.u2.inv() * p.u4.pow(-4);
  for (int k = 0; k < 4; ++k) CHECK(mu[k][k] == c1);
  CHECK(mu[4][4] == c2);
  CHECK(mu[5][5] == c2);
  CHECK(mu[6][6] == c3);
  CHECK(mu[7][7] == c3);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (i != j) CHECK(mu[i][j].is_zero());
  CHECK(mat_det(mu) == Cyclotomic(1));

  // the defining identity certifies the computed matrix and rejects the
  // uncorrected middle block
  Superpotential sp = superpotential(B, kd);
  CHECK(twisted_cyclic(sp.w, mu, -1));
  Mat uncorrected = mu;
  uncorrected[4][4] = uncorrected[5][5] = c2_uncorrected;
  CHECK_FALSE(twisted_cyclic(sp.w, uncorrected, -1));
  CHECK_FALSE(twisted_cyclic(sp.w, uncorrected, 1));
}
