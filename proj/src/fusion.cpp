#include "qd/fusion.hpp"

#include <stdexcept>

namespace qd {

Module as_module(const SimpleDoubleModule& s) {
  return Module{s.dim, s.grade, s.group_action};
}

Module tensor(const FiniteGroup& G, const Module& a, const Module& b) {
  Module out;
  out.dim = a.dim * b.dim;
  out.grade.resize(out.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j) out.grade[i * b.dim + j] = G.mul(a.grade[i], b.grade[j]);
  out.group_action.assign(G.order(), Mat(out.dim, Vec(out.dim, Cyclotomic(0))));
  for (int h = 0; h < G.order(); ++h) {
    Mat& T = out.group_action[h];
    const Mat& A = a.group_action[h];
    const Mat& B = b.group_action[h];
    for (int i = 0; i < a.dim; ++i)
      for (int k = 0; k < a.dim; ++k) {
        if (A[i][k].is_zero()) continue;
        for (int j = 0; j < b.dim; ++j)
          for (int l = 0; l < b.dim; ++l) {
            if (B[j][l].is_zero()) continue;
            T[i * b.dim + j][k * b.dim + l] = A[i][k] * B[j][l];
          }
      }
  }
  return out;
}

Module direct_sum(const Module& a, const Module& b) {
  Module out;
  out.dim = a.dim + b.dim;
  out.grade = a.grade;
  out.grade.insert(out.grade.end(), b.grade.begin(), b.grade.end());
  size_t nh = a.group_action.size();
  out.group_action.assign(nh, Mat(out.dim, Vec(out.dim, Cyclotomic(0))));
  for (size_t h = 0; h < nh; ++h) {
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j) out.group_action[h][i][j] = a.group_action[h][i][j];
    for (int i = 0; i < b.dim; ++i)
      for (int j = 0; j < b.dim; ++j) out.group_action[h][a.dim + i][a.dim + j] = b.group_action[h][i][j];
  }
  return out;
}

std::vector<CopyImage> hom_copies(const FiniteGroup& G, const SimpleDoubleModule& S,
                                  const Module& W) {
  // Unknowns f(e_a) = sum_w c_{a,w} e_w restricted to grade(a) == grade(w);
  // f must commute with the action of every group generator (the grade
  // projections phi_x are already enforced by the restriction).
  std::vector<std::pair<int, int>> vars;
  for (int a = 0; a < S.dim; ++a)
    for (int w = 0; w < W.dim; ++w)
      if (S.grade[a] == W.grade[w]) vars.push_back({a, w});
  if (vars.empty()) return {};

  Mat rows;
  for (const auto& [gname, g] : G.generators()) {
    (void)gname;
    const Mat& AS = S.group_action[g];
    const Mat& AW = W.group_action[g];
    for (int a = 0; a < S.dim; ++a)
      for (int wp = 0; wp < W.dim; ++wp) {
        // sum_w c_{a,w} AW[w][wp] - sum_b AS[a][b] c_{b,wp} = 0
        Vec row(vars.size(), Cyclotomic(0));
        bool nonzero = false;
        for (size_t k = 0; k < vars.size(); ++k) {
          const auto& [va, vw] = vars[k];
          Cyclotomic coeff(0);
          if (va == a && !AW[vw][wp].is_zero()) coeff += AW[vw][wp];
          if (vw == wp && !AS[a][va].is_zero()) coeff -= AS[a][va];
          if (!coeff.is_zero()) {
            row[k] = coeff;
            nonzero = true;
          }
        }
        if (nonzero) rows.push_back(std::move(row));
      }
  }

  Mat basis = rows.empty() ? mat_identity(vars.size()) : nullspace(rows);
  std::vector<CopyImage> out;
  for (const Vec& sol : basis) {
    CopyImage ci;
    ci.simple_index = S.index;
    ci.images.assign(S.dim, Vec(W.dim, Cyclotomic(0)));
    for (size_t k = 0; k < vars.size(); ++k) ci.images[vars[k].first][vars[k].second] = sol[k];
    // normalize on the image of the first basis vector
    Cyclotomic lead(0);
    for (int w = 0; w < W.dim && lead.is_zero(); ++w) lead = ci.images[0][w];
    if (lead.is_zero()) throw std::logic_error("intertwiner vanishes on the first basis vector");
    Cyclotomic inv = lead.inv();
    for (auto& rw : ci.images)
      for (auto& x : rw) x *= inv;
    out.push_back(std::move(ci));
  }
  return out;
}

Decomposition decompose(const FiniteGroup& G, const std::vector<SimpleDoubleModule>& simp,
                        const Module& W) {
  Decomposition d;
  d.multiplicity.assign(simp.size(), 0);
  long dim_acc = 0;
  for (const auto& S : simp) {
    auto copies = hom_copies(G, S, W);
    d.multiplicity[S.index] = static_cast<int>(copies.size());
    dim_acc += static_cast<long>(copies.size()) * S.dim;
    for (auto& c : copies) d.copies.push_back(std::move(c));
  }
  if (dim_acc != W.dim)
    throw std::logic_error("decomposition dimensions do not add up (semisimplicity violated?)");
  return d;
}

Mat s_matrix(const FiniteGroup& G, const std::vector<SimpleDoubleModule>& simp) {
  size_t n = simp.size();
  const auto& classes = G.conjugacy_classes();
  Mat S(n, Vec(n, Cyclotomic(0)));
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q) {
      int a = simp[p].rep, b = simp[q].rep;
      Cyclotomic acc(0);
      for (int g = 0; g < G.order(); ++g) {
        int gbg = G.mul(G.mul(g, b), G.inverse(g));
        if (G.mul(a, gbg) != G.mul(gbg, a)) continue;
        int gag = G.conj(a, g);
        acc += simp[p].cent_char[gbg].conj() * simp[q].cent_char[gag].conj();
      }
      size_t ca = classes[simp[p].class_index].centralizer.size();
      size_t cb = classes[simp[q].class_index].centralizer.size();
      S[p][q] = acc / Cyclotomic(static_cast<long>(ca * cb));
    }
  return S;
}

long verlinde(const Mat& S, int a, int b, int c) {
  Cyclotomic acc(0);
  size_t n = S.size();
  for (size_t i = 0; i < n; ++i)
    acc += S[a][i] * S[b][i] * S[c][i].conj() / S[0][i];
  if (!acc.is_integer()) throw std::logic_error("Verlinde number is not an integer");
  Rational v = acc.rational_value();
  if (v < 0) throw std::logic_error("Verlinde number is negative");
  return static_cast<long>(v.get_num().get_si());
}

CopyImage copy_select(const std::vector<CopyImage>& copies, const Vec& coords) {
  if (copies.empty() || copies.size() != coords.size())
    throw std::invalid_argument("copy_select: coords must match the copy count");
  bool all_zero = true;
  for (const auto& c : coords)
    if (!c.is_zero()) all_zero = false;
  if (all_zero) throw std::invalid_argument("copy_select: coords must not all be zero");
  CopyImage out;
  out.simple_index = copies[0].simple_index;
  size_t rows = copies[0].images.size(), cols = copies[0].images[0].size();
  out.images.assign(rows, Vec(cols, Cyclotomic(0)));
  for (size_t k = 0; k < copies.size(); ++k) {
    if (copies[k].simple_index != out.simple_index)
      throw std::invalid_argument("copy_select: copies of different simples");
    if (coords[k].is_zero()) continue;
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) out.images[i][j] += coords[k] * copies[k].images[i][j];
  }
  return out;
}

}  // namespace qd
