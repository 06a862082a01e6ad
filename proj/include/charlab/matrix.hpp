#pragma once

#include <cstddef>
#include <vector>

#include "charlab/errors.hpp"
#include "charlab/rational.hpp"

namespace charlab {

/// Small dense matrix over an exact field (Rational or Scalar).
template <typename F>
class Mat {
 public:
  Mat() = default;
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows, std::vector<F>(cols, F())) {}
  explicit Mat(std::vector<std::vector<F>> rows)
      : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()), a_(std::move(rows)) {
    for (const auto& r : a_)
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix rows");
  }

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m.a_[i][i] = F(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  std::vector<F>& operator[](size_t i) { return a_[i]; }
  const std::vector<F>& operator[](size_t i) const { return a_[i]; }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t.a_[j][i] = a_[i][j];
    return t;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols_ != y.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Mat r(x.rows_, y.cols_);
    for (size_t i = 0; i < x.rows_; ++i)
      for (size_t k = 0; k < x.cols_; ++k) {
        if (x.a_[i][k].is_zero()) continue;
        for (size_t j = 0; j < y.cols_; ++j) r.a_[i][j] += x.a_[i][k] * y.a_[k][j];
      }
    return r;
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<std::vector<F>> a_;
};

/// In-place reduced row echelon form; returns the pivot column of each pivot
/// row in order.
template <typename F>
std::vector<size_t> rref(Mat<F>& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t sel = row;
    while (sel < m.rows() && m[sel][col].is_zero()) ++sel;
    if (sel == m.rows()) continue;
    std::swap(m[sel], m[row]);
    F inv = m[row][col].inverse();
    for (size_t j = col; j < m.cols(); ++j) m[row][j] = m[row][j] * inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      F f = m[i][col];
      for (size_t j = col; j < m.cols(); ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Basis of the right null space {x : m x = 0}, one vector per free column,
/// in reduced-echelon order (deterministic).
template <typename F>
std::vector<std::vector<F>> null_space(Mat<F> m) {
  std::vector<size_t> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols(), F());
    v[free] = F(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename F>
Mat<F> inverse(Mat<F> m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  size_t n = m.rows();
  Mat<F> aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = F(1);
  }
  std::vector<size_t> pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw SingularMatrix("matrix is singular");
  Mat<F> inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

/// Exact positive-semidefiniteness test for a symmetric rational matrix
/// (symmetric Gaussian elimination; a negative pivot or a zero pivot with a
/// nonzero residual row disproves PSD).
inline bool is_positive_semidefinite(Mat<Rational> m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("PSD test needs a square matrix");
  size_t n = m.rows();
  for (size_t k = 0; k < n; ++k) {
    if (m[k][k] < Rational(0)) return false;
    if (m[k][k].is_zero()) {
      for (size_t j = k; j < n; ++j)
        if (!m[k][j].is_zero()) return false;
      continue;
    }
    for (size_t i = k + 1; i < n; ++i) {
      Rational f = m[i][k] / m[k][k];
      for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

}  // namespace charlab
