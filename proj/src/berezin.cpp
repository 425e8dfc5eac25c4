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

#include "grassflow/berezin.hpp"

namespace grassflow {

Multivector quadratic_form(const Matrix& s) {
  if (!s.is_square() || !s.is_skew_symmetric())
    throw Error(Errc::not_skew_symmetric,
                "quadratic form needs a skew-symmetric matrix");
  int m = s.rows();
  Multivector q(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      q = q + Multivector::monomial(m, IndexSet{i + 1, j + 1}, -s.at(i, j));
  return q;
}

Rational pfaffian_via_integral(const Matrix& s) {
  if (!s.is_square() || !s.is_skew_symmetric())
    throw Error(Errc::not_skew_symmetric, "pfaffian needs a skew-symmetric matrix");
  if (s.rows() % 2 != 0)
    throw Error(Errc::odd_dimension, "pfaffian needs even dimension");
  int m = s.rows();
  std::vector<int> order(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  return berezin_ordered(mv_exp(quadratic_form(s)), order);
}

Rational det_via_integral(const Matrix& m) {
  if (!m.is_square())
    throw Error(Errc::index_out_of_range, "determinant of non-square matrix");
  int n = m.rows();
  if (2 * n > Multivector::kMaxGenerators)
    throw Error(Errc::size_limit, "matrix too large for the integral route");
  Multivector expo(2 * n);
  // -conj_i M_ij plain_j = +M_ij x_j ^ x_{n+i}, already in increasing order
  // since j <= n < n+i.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      expo = expo + Multivector::monomial(2 * n, IndexSet{j, n + i},
                                          m.at(i - 1, j - 1));
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(2 * n));
  for (int i = n; i >= 1; --i) {
    order.push_back(n + i);
    order.push_back(i);
  }
  return berezin_ordered(mv_exp(expo), order);
}

}  // namespace grassflow
