#include "qd/linalg.hpp"

#include <stdexcept>

namespace qd {

Mat mat_identity(size_t n) {
  Mat m(n, Vec(n, Cyclotomic(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = Cyclotomic(1);
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.empty() || b.empty()) return {};
  size_t n = a.size(), k = b.size(), m = b[0].size();
  Mat out(n, Vec(m, Cyclotomic(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j].is_zero()) continue;
      for (size_t l = 0; l < m; ++l) {
        if (b[j][l].is_zero()) continue;
        out[i][l] += a[i][j] * b[j][l];
      }
    }
  return out;
}

Vec vec_mat(const Vec& v, const Mat& m) {
  if (m.empty()) return {};
  Vec out(m[0].size(), Cyclotomic(0));
  for (size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    for (size_t l = 0; l < out.size(); ++l) {
      if (m[j][l].is_zero()) continue;
      out[l] += v[j] * m[j][l];
    }
  }
  return out;
}

Mat mat_scale(const Mat& a, const Cyclotomic& c) {
  Mat out = a;
  for (auto& row : out)
    for (auto& x : row) x *= c;
  return out;
}

Mat mat_add(const Mat& a, const Mat& b) {
  Mat out = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
  return out;
}

Mat mat_transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat out(a[0].size(), Vec(a.size(), Cyclotomic(0)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

bool mat_is_zero(const Mat& a) {
  for (const auto& row : a)
    if (!vec_is_zero(row)) return false;
  return true;
}

std::vector<size_t> rref(Mat& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    Cyclotomic inv = m[r][c].inv();
    for (size_t j = c; j < cols; ++j)
      if (!m[r][j].is_zero()) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Cyclotomic f = m[i][c];
      for (size_t j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);  // keep only the nonzero rows
  return pivots;
}

size_t rank(Mat m) { return rref(m).size(); }

Mat nullspace(const Mat& m_in) {
  if (m_in.empty()) return {};
  size_t cols = m_in[0].size();
  Mat m = m_in;
  std::vector<size_t> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (size_t p : pivots) is_pivot[p] = true;
  Mat basis;
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v(cols, Cyclotomic(0));
    v[c] = Cyclotomic(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(Mat a, Vec b) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  std::vector<size_t> piv = rref(a);
  Vec x(cols, Cyclotomic(0));
  for (size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == cols) return std::nullopt;  // pivot in the constant column
    x[piv[r]] = a[r][cols];
  }
  return x;
}

Mat mat_inverse(const Mat& a) {
  size_t n = a.size();
  Mat aug = a;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? Cyclotomic(1) : Cyclotomic(0));
  }
  std::vector<size_t> piv = rref(aug);
  if (piv.size() != n || piv[n - 1] != n - 1) throw std::domain_error("matrix not invertible");
  Mat out(n, Vec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

Cyclotomic mat_det(Mat a) {
  size_t n = a.size();
  Cyclotomic det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t sel = c;
    while (sel < n && a[sel][c].is_zero()) ++sel;
    if (sel == n) return Cyclotomic(0);
    if (sel != c) {
      std::swap(a[c], a[sel]);
      det = -det;
    }
    det *= a[c][c];
    Cyclotomic inv = a[c][c].inv();
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      Cyclotomic f = a[i][c] * inv;
      for (size_t j = c; j < n; ++j)
        if (!a[c][j].is_zero()) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

bool in_row_space(const Mat& r, const std::vector<size_t>& p, Vec v) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (v[p[i]].is_zero()) continue;
    Cyclotomic f = v[p[i]];
    for (size_t j = 0; j < v.size(); ++j)
      if (!r[i][j].is_zero()) v[j] -= f * r[i][j];
  }
  return vec_is_zero(v);
}

}  // namespace qd
