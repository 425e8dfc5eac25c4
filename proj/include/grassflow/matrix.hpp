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

#ifndef GRASSFLOW_MATRIX_HPP
#define GRASSFLOW_MATRIX_HPP

#include <vector>

#include "grassflow/index_set.hpp"
#include "grassflow/rational.hpp"

namespace grassflow {

// Dense matrix over Rational. Indices are 0-based here; IndexSet selections
// are 1-based and converted at the boundary.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols);

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j);
  const Rational& at(int i, int j) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_skew_symmetric() const;

  Matrix transpose() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

// Rows/cols are 1-based selections; the result keeps their increasing order.
Matrix submatrix(const Matrix& m, const IndexSet& rows, const IndexSet& cols);

// Exact Gaussian elimination. det of the empty matrix is 1.
Rational mat_det(const Matrix& m);

// Gauss-Jordan; throws SingularMatrix when no inverse exists.
Matrix mat_inverse(const Matrix& m);

// Pfaffian as the signed sum over perfect matchings, sign of the permutation
// (i1, j1, i2, j2, ...) with i1 < i2 < ... and ik < jk. Input must be skew
// symmetric with even dimension; pf of the 0x0 matrix is 1.
Rational pfaffian_combinatorial(const Matrix& s);

// Pfaffian by skew-symmetric elimination (congruence updates keep the value;
// row/column pair swaps flip the sign).
Rational pfaffian_elimination(const Matrix& s);

namespace serial {
// Reference implementations without the threaded inner loops; kept for
// byte-exact comparison in tests and for the bench tool.
Rational mat_det(const Matrix& m);
Rational pfaffian_combinatorial(const Matrix& s);
}  // namespace serial

}  // namespace grassflow

#endif
