#pragma once

#include "qd/cyclotomic.hpp"

#include <optional>
#include <vector>

namespace qd {

using Vec = std::vector<Cyclotomic>;
using Mat = std::vector<Vec>;

Mat mat_identity(size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
Vec vec_mat(const Vec& v, const Mat& m);  // row vector times matrix
Mat mat_scale(const Mat& a, const Cyclotomic& c);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_transpose(const Mat& a);
bool mat_is_zero(const Mat& a);
bool vec_is_zero(const Vec& v);

/// In-place reduced row echelon form (exact division; Cyclotomic is a field).
/// Returns the pivot column of each nonzero row, in order.
std::vector<size_t> rref(Mat& m);

size_t rank(Mat m);

/// Basis of {x : m x^T = 0}, rows are basis vectors, canonical (from RREF).
Mat nullspace(const Mat& m);

/// Solve a x = b for a column vector; empty optional when inconsistent.
std::optional<Vec> solve(Mat a, Vec b);

Mat mat_inverse(const Mat& a);  // throws std::domain_error when singular

Cyclotomic mat_det(Mat a);

/// True iff v lies in the row space of the RREF matrix r with pivot list p.
bool in_row_space(const Mat& r, const std::vector<size_t>& p, Vec v);

}  // namespace qd
