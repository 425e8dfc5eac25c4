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

#include <utility>
#include <vector>

#include "grassflow/matrix.hpp"

namespace grassflow {

namespace {

void require_skew_even(const Matrix& s) {
  if (!s.is_square() || !s.is_skew_symmetric())
    throw Error(Errc::not_skew_symmetric, "pfaffian needs a skew-symmetric matrix");
  if (s.rows() % 2 != 0)
    throw Error(Errc::odd_dimension, "pfaffian needs even dimension");
}

// Signed sum over perfect matchings of `idx`: pair the first index with each
// later one; pairing idx[0] with idx[u] contributes sign (-1)^(u-1) because
// idx[u] jumps over u-1 smaller indices on its way to the front.
Rational pf_matchings(const Matrix& s, const std::vector<int>& idx) {
  if (idx.empty()) return Rational(1);
  Rational acc(0);
  for (std::size_t u = 1; u < idx.size(); ++u) {
    const Rational& head = s.at(idx[0], idx[u]);
    if (head.is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t t = 1; t < idx.size(); ++t)
      if (t != u) rest.push_back(idx[t]);
    Rational term = head * pf_matchings(s, rest);
    if (u % 2 == 0) term = -term;
    acc += term;
  }
  return acc;
}

Rational pf_combinatorial_impl(const Matrix& s, bool threaded) {
  require_skew_even(s);
  int m = s.rows();
  if (m == 0) return Rational(1);
  std::vector<int> idx(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;

  // The branches over the first partner are independent; summing a
  // precomputed per-branch vector keeps the result identical to the serial
  // recursion no matter how the work is scheduled.
  std::vector<Rational> branch(static_cast<std::size_t>(m - 1));
#pragma omp parallel for schedule(dynamic) if (threaded && m >= 10)
  for (int u = 1; u < m; ++u) {
    const Rational& head = s.at(0, u);
    if (head.is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(m - 2));
    for (int t = 1; t < m; ++t)
      if (t != u) rest.push_back(t);
    Rational term = head * pf_matchings(s, rest);
    if (u % 2 == 0) term = -term;
    branch[static_cast<std::size_t>(u - 1)] = std::move(term);
  }
  Rational acc(0);
  for (Rational& b : branch) acc += b;
  return acc;
}

}  // namespace

Rational pfaffian_combinatorial(const Matrix& s) {
  return pf_combinatorial_impl(s, true);
}

Rational serial::pfaffian_combinatorial(const Matrix& s) {
  require_skew_even(s);
  if (s.rows() == 0) return Rational(1);
  std::vector<int> idx(static_cast<std::size_t>(s.rows()));
  for (int i = 0; i < s.rows(); ++i) idx[static_cast<std::size_t>(i)] = i;
  return pf_matchings(s, idx);
}

Rational pfaffian_elimination(const Matrix& input) {
  require_skew_even(input);
  int m = input.rows();
  if (m == 0) return Rational(1);
  Matrix s = input;
  int sign = 1;
  Rational pf(1);
  for (int k = 0; k + 1 < m; k += 2) {
    int pivot = -1;
    for (int i = k + 1; i < m; ++i)
      if (!s.at(i, k).is_zero()) { pivot = i; break; }
    if (pivot < 0) return Rational(0);
    if (pivot != k + 1) {
      // Simultaneous row and column swap: congruence by a transposition,
      // which flips the pfaffian's sign.
      for (int j = 0; j < m; ++j) std::swap(s.at(k + 1, j), s.at(pivot, j));
      for (int i = 0; i < m; ++i) std::swap(s.at(i, k + 1), s.at(i, pivot));
      sign = -sign;
    }
    const Rational p = s.at(k + 1, k);
    for (int i = k + 2; i < m; ++i) {
      if (s.at(i, k).is_zero()) continue;
      Rational f = s.at(i, k) / p;
      // Unit transvection applied symmetrically leaves the pfaffian fixed.
      for (int j = 0; j < m; ++j) s.at(i, j) -= f * s.at(k + 1, j);
      for (int j = 0; j < m; ++j) s.at(j, i) -= f * s.at(j, k + 1);
    }
    pf *= s.at(k, k + 1);
  }
  return sign > 0 ? pf : -pf;
}

}  // namespace grassflow
