/*
 * Copyright 2026 The Grassflow Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "grassflow/matrix.hpp"

#include <string>
#include <utility>

namespace grassflow {

namespace {

// Row updates during elimination are independent of each other, so they can
// run threaded; exactness makes the result identical either way. Small
// systems stay serial.
constexpr int kParallelRowThreshold = 24;

void check_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(Errc::index_out_of_range, "matrix shape mismatch");
}

}  // namespace

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0)
    throw Error(Errc::index_out_of_range, "negative matrix dimension");
  a_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Rational& Matrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw Error(Errc::index_out_of_range,
                "entry (" + std::to_string(i) + "," + std::to_string(j) +
                    ") outside " + std::to_string(rows_) + "x" +
                    std::to_string(cols_));
  return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
            static_cast<std::size_t>(j)];
}

const Rational& Matrix::at(int i, int j) const {
  return const_cast<Matrix*>(this)->at(i, j);
}

bool Matrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_same_shape(a, b);
  Matrix r(a.rows(), a.cols());
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  check_same_shape(a, b);
  Matrix r(a.rows(), a.cols());
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw Error(Errc::index_out_of_range, "matrix product shape mismatch");
  Matrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Matrix submatrix(const Matrix& m, const IndexSet& rows, const IndexSet& cols) {
  rows.require_within(m.rows(), "row selection");
  cols.require_within(m.cols(), "column selection");
  Matrix r(rows.size(), cols.size());
  for (int i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols.size(); ++j)
      r.at(i, j) = m.at(rows[i] - 1, cols[j] - 1);
  return r;
}

namespace {

Rational det_impl(const Matrix& input, bool threaded) {
  if (!input.is_square())
    throw Error(Errc::index_out_of_range, "determinant of non-square matrix");
  int n = input.rows();
  Matrix m = input;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (!m.at(i, k).is_zero()) { pivot = i; break; }
    if (pivot < 0) return Rational(0);
    if (pivot != k) {
      for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
      sign = -sign;
    }
    const Rational pk = m.at(k, k);
#pragma omp parallel for schedule(static) \
    if (threaded && n - k > kParallelRowThreshold)
    for (int i = k + 1; i < n; ++i) {
      if (m.at(i, k).is_zero()) continue;
      Rational f = m.at(i, k) / pk;
      for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  Rational d = sign;
  for (int k = 0; k < n; ++k) d *= m.at(k, k);
  return d;
}

}  // namespace

Rational mat_det(const Matrix& m) { return det_impl(m, true); }

Rational serial::mat_det(const Matrix& m) { return det_impl(m, false); }

Matrix mat_inverse(const Matrix& m) {
  if (!m.is_square())
    throw Error(Errc::singular_matrix, "inverse of non-square matrix");
  int n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (!a.at(i, k).is_zero()) { pivot = i; break; }
    if (pivot < 0)
      throw Error(Errc::singular_matrix, "matrix is singular");
    if (pivot != k)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(k, j), a.at(pivot, j));
        std::swap(inv.at(k, j), inv.at(pivot, j));
      }
    Rational pk = a.at(k, k);
    for (int j = 0; j < n; ++j) {
      a.at(k, j) /= pk;
      inv.at(k, j) /= pk;
    }
#pragma omp parallel for schedule(static) if (n > kParallelRowThreshold)
    for (int i = 0; i < n; ++i) {
      if (i == k || a.at(i, k).is_zero()) continue;
      Rational f = a.at(i, k);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

}  // namespace grassflow
