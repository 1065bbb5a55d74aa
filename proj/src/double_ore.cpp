#include "qd/double_ore.hpp"

#include <algorithm>
#include <stdexcept>

namespace qd {

bool skew_matrix_ok(const Mat& q) {
  size_t n = q.size();
  for (size_t i = 0; i < n; ++i) {
    if (q[i].size() != n) return false;
    if (!(q[i][i] == Cyclotomic(1))) return false;
    for (size_t j = 0; j < n; ++j) {
      if (q[i][j].is_zero()) return false;
      if (!(q[i][j] * q[j][i] == Cyclotomic(1))) return false;
    }
  }
  return true;
}

AlgebraPresentation skew_poly(const Mat& q, std::vector<std::string> names,
                              std::vector<int> grades,
                              std::shared_ptr<const FiniteGroup> group) {
  if (!skew_matrix_ok(q)) throw std::invalid_argument("matrix is not multiplicatively skew-symmetric");
  if (names.size() != q.size()) throw std::invalid_argument("name count mismatch");
  AlgebraPresentation A;
  A.gen_names = std::move(names);
  A.gen_grade = std::move(grades);
  A.group = std::move(group);
  int n = static_cast<int>(q.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      NcPoly rel = poly_term(Word{static_cast<char>(j), static_cast<char>(i)}) -
                   poly_term(Word{static_cast<char>(i), static_cast<char>(j)}, q[j][i]);
      A.relations.push_back(std::move(rel));
    }
  return A;
}

namespace {

// Operator matrix of sigma_{ab} on A_1: column k = coefficients of sigma_ab(gen_k).
Mat sigma_block(const DOEData& d, int a, int b) {
  int m = d.base.gen_count();
  Mat M(m, Vec(m, Cyclotomic(0)));
  int entry = (a - 1) * 2 + (b - 1);
  for (int k = 0; k < m; ++k)
    for (const auto& [w, c] : d.sigma[k][entry].terms) {
      if (w.size() != 1) throw std::invalid_argument("sigma entries must be linear forms");
      M[static_cast<unsigned char>(w[0])][k] = c;
    }
  return M;
}

// Apply an operator block to a linear form.
NcPoly apply_block(const Mat& M, const NcPoly& lin) {
  NcPoly out;
  for (const auto& [w, c] : lin.terms) {
    if (w.size() != 1) throw std::invalid_argument("expected a linear form");
    int k = static_cast<unsigned char>(w[0]);
    for (size_t l = 0; l < M.size(); ++l)
      if (!M[l][k].is_zero()) poly_add_term(out, Word(1, static_cast<char>(l)), c * M[l][k]);
  }
  return out;
}

using MatPoly = std::array<NcPoly, 4>;  // 2x2 with entries in the free algebra

MatPoly matpoly_mul(const MatPoly& A, const MatPoly& B) {
  MatPoly C;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      NcPoly acc;
      for (int k = 0; k < 2; ++k) acc += A[i * 2 + k] * B[k * 2 + j];
      C[i * 2 + j] = acc;
    }
  return C;
}

// Evaluate a quadratic relation with generators replaced by 2x2 matrices.
MatPoly substitute(const NcPoly& rel, const std::vector<MatPoly>& images) {
  MatPoly acc{};  // zero
  for (const auto& [w, c] : rel.terms) {
    if (w.size() != 2) throw std::invalid_argument("expected quadratic relations");
    MatPoly prod = matpoly_mul(images[static_cast<unsigned char>(w[0])],
                               images[static_cast<unsigned char>(w[1])]);
    for (int e = 0; e < 4; ++e) acc[e] += prod[e].scaled(c);
  }
  return acc;
}

bool is_algebra_map(const DOEData& d, const std::vector<MatPoly>& images) {
  for (const NcPoly& rel : d.base.relations) {
    MatPoly img = substitute(rel, images);
    for (int e = 0; e < 4; ++e)
      if (!normal_form(img[e], d.base_gb).is_zero()) return false;
  }
  return true;
}

}  // namespace

bool sigma_is_algebra_map(const DOEData& d) {
  return is_algebra_map(d, d.sigma);
}

bool sigma_invertible(const DOEData& d) {
  int m = d.base.gen_count();
  // 2m x 2m block matrix of the four operator blocks
  Mat big(2 * m, Vec(2 * m, Cyclotomic(0)));
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      Mat blk = sigma_block(d, a, b);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) big[(a - 1) * m + i][(b - 1) * m + j] = blk[i][j];
    }
  Mat inv;
  try {
    inv = mat_inverse(big);
  } catch (const std::domain_error&) {
    return false;
  }
  // phi(gen k) = [[phi11(gen k), ...]] from the inverse blocks
  std::vector<MatPoly> phi(m);
  for (int k = 0; k < m; ++k)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        NcPoly entry;
        for (int l = 0; l < m; ++l) {
          const Cyclotomic& c = inv[a * m + l][b * m + k];
          if (!c.is_zero()) poly_add_term(entry, Word(1, static_cast<char>(l)), c);
        }
        phi[k][a * 2 + b] = entry;
      }
  return is_algebra_map(d, phi);
}

std::optional<bool> do_conditions_shortcut(const DOEData& d) {
  bool all_diag = true, all_skew = true;
  for (const auto& sg : d.sigma) {
    if (!sg[1].is_zero() || !sg[2].is_zero()) all_diag = false;
    if (!sg[0].is_zero() || !sg[3].is_zero()) all_skew = false;
  }
  if (all_diag) {
    Mat s11 = sigma_block(d, 1, 1), s22 = sigma_block(d, 2, 2);
    return mat_mul(s11, s22) == mat_mul(s22, s11);
  }
  if (all_skew) {
    // sigma_21 sigma_12 = p^2 sigma_12 sigma_21; for p = +-1 this is the
    // commutation of the remark.
    Mat s12 = sigma_block(d, 1, 2), s21 = sigma_block(d, 2, 1);
    return mat_mul(s21, s12) == mat_scale(mat_mul(s12, s21), d.p * d.p);
  }
  return std::nullopt;
}

bool do_conditions(const DOEData& d) {
  Mat s11 = sigma_block(d, 1, 1), s12 = sigma_block(d, 1, 2);
  Mat s21 = sigma_block(d, 2, 1), s22 = sigma_block(d, 2, 2);
  const Cyclotomic& p = d.p;
  bool ok = true;
  for (int k = 0; k < d.base.gen_count() && ok; ++k) {
    const NcPoly& g11 = d.sigma[k][0];
    const NcPoly& g12 = d.sigma[k][1];
    const NcPoly& g21 = d.sigma[k][2];
    const NcPoly& g22 = d.sigma[k][3];
    NcPoly c1 = apply_block(s21, g11) - apply_block(s11, g21).scaled(p);
    NcPoly c2 = apply_block(s21, g12) - apply_block(s12, g21).scaled(p * p) -
                (apply_block(s11, g22) - apply_block(s22, g11)).scaled(p);
    NcPoly c3 = apply_block(s22, g12) - apply_block(s12, g22).scaled(p);
    ok = c1.is_zero() && c2.is_zero() && c3.is_zero();
  }
  if (auto shortcut = do_conditions_shortcut(d); shortcut && *shortcut != ok)
    throw std::logic_error("diagonal/skew-diagonal shortcut disagrees with the full check");
  return ok;
}

AlgebraPresentation build_double_ore(const DOEData& d, const std::string& x1_name,
                                     const std::string& x2_name, int x1_grade, int x2_grade,
                                     std::vector<int> final_order) {
  if (!do_conditions(d)) throw std::invalid_argument("double Ore compatibility conditions fail");
  int m = d.base.gen_count();
  if (final_order.empty()) {
    final_order = {-1, -2};
    for (int k = 0; k < m; ++k) final_order.push_back(k);
  }
  if (final_order.size() != static_cast<size_t>(m + 2))
    throw std::invalid_argument("final_order must list both new generators and every base generator");

  std::vector<int> pos_of_base(m, -1);
  int pos_x1 = -1, pos_x2 = -1;
  AlgebraPresentation B;
  B.gen_names.resize(m + 2);
  bool graded = !d.base.gen_grade.empty();
  if (graded) B.gen_grade.resize(m + 2);
  for (size_t p2 = 0; p2 < final_order.size(); ++p2) {
    int tok = final_order[p2];
    if (tok == -1) {
      pos_x1 = static_cast<int>(p2);
      B.gen_names[p2] = x1_name;
      if (graded) B.gen_grade[p2] = x1_grade;
    } else if (tok == -2) {
      pos_x2 = static_cast<int>(p2);
      B.gen_names[p2] = x2_name;
      if (graded) B.gen_grade[p2] = x2_grade;
    } else {
      pos_of_base[tok] = static_cast<int>(p2);
      B.gen_names[p2] = d.base.gen_names[tok];
      if (graded) B.gen_grade[p2] = d.base.gen_grade[tok];
    }
  }
  if (pos_x1 < 0 || pos_x2 < 0) throw std::invalid_argument("final_order must place both new generators");
  B.group = d.base.group;
  B.expected_gkdim = d.base.expected_gkdim + 2;

  auto remap = [&](const NcPoly& p2) {
    NcPoly out;
    for (const auto& [w, c] : p2.terms) {
      Word nw;
      for (char ch : w) nw.push_back(static_cast<char>(pos_of_base[static_cast<unsigned char>(ch)]));
      out.terms.emplace(nw, c);
    }
    return out;
  };

  for (const NcPoly& rel : d.base.relations) B.relations.push_back(remap(rel));
  Word X1(1, static_cast<char>(pos_x1)), X2(1, static_cast<char>(pos_x2));
  B.relations.push_back(poly_term(X1 + X2) - poly_term(X2 + X1, d.p));
  for (int k = 0; k < m; ++k) {
    Word r(1, static_cast<char>(pos_of_base[k]));
    NcPoly row1 = poly_term(X1 + r) - remap(d.sigma[k][0]) * poly_term(X1) -
                  remap(d.sigma[k][1]) * poly_term(X2);
    NcPoly row2 = poly_term(X2 + r) - remap(d.sigma[k][2]) * poly_term(X1) -
                  remap(d.sigma[k][3]) * poly_term(X2);
    B.relations.push_back(std::move(row1));
    B.relations.push_back(std::move(row2));
  }
  return B;
}

DOEData d4_doe_data(const FamilyParams& pp) {
  // base k_q[y1,y2,z1,z2] in the relation-table orientation
  auto Gp = std::make_shared<const FiniteGroup>(FiniteGroup::dicyclic(2));
  const FiniteGroup& G = *Gp;
  int s = G.generator("s"), r = G.generator("r");
  Cyclotomic be(pp.beta), ga(pp.gamma);
  Mat q(4, Vec(4, Cyclotomic(1)));
  auto set = [&](int i, int j, const Cyclotomic& v) {
    q[i][j] = v;
    q[j][i] = v.inv();
  };
  set(0, 1, be);        // y1 y2 = beta y2 y1
  set(0, 2, pp.u4);     // y1 z1 = u4 z1 y1
  set(0, 3, pp.u3);     // y1 z2 = u3 z2 y1
  set(1, 2, pp.u3);     // y2 z1 = u3 z1 y2
  set(1, 3, pp.u4);     // y2 z2 = u4 z2 y2
  set(2, 3, ga);        // z1 z2 = gamma z2 z1
  DOEData d;
  d.base = skew_poly(q, {"y1", "y2", "z1", "z2"},
                     {G.mul(s, r), G.mul(s, G.power(r, 3)), G.mul(s, r), G.mul(s, G.power(r, 3))}, Gp);
  d.base_gb = groebner(d.base, 3);
  d.p = Cyclotomic(pp.alpha);
  auto lin = [](int k, Cyclotomic c) { return poly_term(Word(1, static_cast<char>(k)), std::move(c)); };
  const Cyclotomic I = Cyclotomic::imag();
  NcPoly zero;
  d.sigma = {
      {zero, lin(0, pp.u1), lin(0, pp.u1), zero},
      {zero, lin(1, -pp.u1), lin(1, -pp.u1), zero},
      {zero, lin(2, I * pp.u2), lin(2, I * pp.u2), zero},
      {zero, lin(3, -(I * pp.u2)), lin(3, -(I * pp.u2)), zero},
  };
  return d;
}

D8Stages d8_doe_stages(const FamilyParams& pp) {
  auto Gp = std::make_shared<const FiniteGroup>(FiniteGroup::dicyclic(4));
  const FiniteGroup& G = *Gp;
  int s = G.generator("s"), r = G.generator("r");
  auto gr = [&](int eps, int k) { return eps ? G.mul(s, G.power(r, k)) : G.power(r, k); };
  const Cyclotomic I = Cyclotomic::imag();
  const Cyclotomic w8 = Cyclotomic::root(8, 1);
  const Cyclotomic as2 = Cyclotomic(pp.alpha) * (w8 + w8.conj()).inv();
  auto lin = [](int k, Cyclotomic c) { return poly_term(Word(1, static_cast<char>(k)), std::move(c)); };
  NcPoly zero;

  D8Stages st;

  // C1 = k_{-1}[x1, x3]
  Mat q1(2, Vec(2, Cyclotomic(1)));
  q1[0][1] = Cyclotomic(-1);
  q1[1][0] = Cyclotomic(-1);
  st.stage1.base = skew_poly(q1, {"x1", "x3"}, {gr(1, 1), gr(1, 5)}, Gp);
  st.stage1.base_gb = groebner(st.stage1.base, 3);
  st.stage1.p = Cyclotomic(-1);
  st.stage1.sigma = {
      {lin(1, as2 * w8.pow(3)), lin(0, as2 * w8), lin(0, as2 * w8), lin(1, as2 * w8.pow(7))},
      {lin(0, as2 * w8.pow(3)), lin(1, as2 * w8.pow(5)), lin(1, as2 * w8.pow(5)), lin(0, as2 * w8.pow(7))},
  };
  // C2 with order x1 > x2 > x3 > x4
  st.c2 = build_double_ore(st.stage1, "x2", "x4", gr(1, 3), gr(1, 7), {0, -1, 1, -2});

  st.stage2.base = st.c2;
  st.stage2.base_gb = groebner(st.c2, 3);
  st.stage2.p = Cyclotomic(pp.beta);
  st.stage2.sigma = {
      {zero, lin(0, -pp.u3), lin(0, pp.u3), zero},
      {zero, lin(1, pp.u3), lin(1, -pp.u3), zero},
      {zero, lin(2, -pp.u3), lin(2, pp.u3), zero},
      {zero, lin(3, pp.u3), lin(3, -pp.u3), zero},
  };
  st.c3 = build_double_ore(st.stage2, "y1", "y2", gr(0, 3), gr(0, 5), {0, 1, 2, 3, -1, -2});

  st.stage3.base = st.c3;
  st.stage3.base_gb = groebner(st.c3, 3);
  st.stage3.p = Cyclotomic(pp.gamma);
  st.stage3.sigma = {
      {zero, lin(0, -(I * pp.u4)), lin(0, pp.u4), zero},
      {zero, lin(1, pp.u4), lin(1, -(I * pp.u4)), zero},
      {zero, lin(2, I * pp.u4), lin(2, -pp.u4), zero},
      {zero, lin(3, -pp.u4), lin(3, I * pp.u4), zero},
      {lin(4, pp.u2), zero, zero, lin(4, pp.u1)},
      {lin(5, pp.u1), zero, zero, lin(5, pp.u2)},
  };
  st.full = build_double_ore(st.stage3, "z1", "z2", gr(0, 3), gr(0, 5), {0, 1, 2, 3, 4, 5, -1, -2});
  return st;
}

bool same_quadratic_ideal(const AlgebraPresentation& a, const AlgebraPresentation& b) {
  if (a.gen_count() != b.gen_count()) return false;
  int m = a.gen_count();
  std::vector<Word> words;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) words.push_back(Word{static_cast<char>(i), static_cast<char>(j)});
  std::sort(words.begin(), words.end(), DeglexGreater{});
  auto span = [&](const AlgebraPresentation& p) {
    Mat rows;
    for (const NcPoly& rel : p.relations) {
      Vec v(words.size(), Cyclotomic(0));
      for (const auto& [w, c] : rel.terms) {
        auto it = std::lower_bound(words.begin(), words.end(), w, DeglexGreater{});
        v[it - words.begin()] = c;
      }
      rows.push_back(std::move(v));
    }
    rref(rows);
    return rows;
  };
  return span(a) == span(b);
}

}  // namespace qd
