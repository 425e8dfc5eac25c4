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

#include "grassflow/graph_matrices.hpp"

#include "grassflow/errors.hpp"

namespace grassflow {

Matrix adjacency_matrix(const Digraph& g) {
  Matrix a(g.vertex_count(), g.vertex_count());
  for (const Edge& e : g.edges()) {
    a.at(e.src - 1, e.dst - 1) += e.weight;
  }
  return a;
}

Matrix path_matrix(const Digraph& g) {
  Matrix one_minus_a =
      Matrix::identity(g.vertex_count()) - adjacency_matrix(g);
  try {
    return mat_inverse(one_minus_a);
  } catch (const Error& err) {
    if (err.code() == Errc::singular_matrix) {
      throw Error(Errc::singular_system,
                  "1 - A is singular, the walk series has no rational value");
    }
    throw;
  }
}

Matrix q_matrix(const Matrix& m, const IndexSet& I) {
  int n = m.rows();
  I.require_within(n, "free index");
  Matrix q(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational sum(0);
      for (int ki = 0; ki < I.size(); ++ki) {
        for (int li = ki + 1; li < I.size(); ++li) {
          int k = I[ki] - 1;
          int l = I[li] - 1;
          sum += m.at(i, k) * m.at(j, l) - m.at(i, l) * m.at(j, k);
        }
      }
      q.at(i, j) = sum;
    }
  }
  return q;
}

Matrix q_matrix(const Digraph& g, const IndexSet& I) {
  return q_matrix(path_matrix(g), I);
}

Matrix b_matrix(int n, const IndexSet& K) {
  K.require_within(n, "index");
  Matrix b(n, n);
  for (int ki = 0; ki < K.size(); ++ki) {
    for (int li = ki + 1; li < K.size(); ++li) {
      b.at(K[ki] - 1, K[li] - 1) = Rational(1);
      b.at(K[li] - 1, K[ki] - 1) = Rational(-1);
    }
  }
  return b;
}

RpqMatrices rpq_matrices(const Matrix& m, const IndexSet& I,
                         const IndexSet& J) {
  int n = m.rows();
  Matrix bi = b_matrix(n, I);
  Matrix bj = b_matrix(n, J);
  Matrix mt = m.transpose();
  Matrix correction = Matrix::identity(n) + bj * mt * bi * m;
  Matrix inv;
  try {
    inv = mat_inverse(correction);
  } catch (const Error& err) {
    if (err.code() == Errc::singular_matrix) {
      throw Error(Errc::singular_correction,
                  "1 + B^J M^T B^I M is singular");
    }
    throw;
  }
  RpqMatrices out;
  out.r = m * inv;
  out.p = m * bj * out.r.transpose();
  out.q = mt * bi * out.r;
  return out;
}

RpqMatrices rpq_matrices(const Digraph& g, const IndexSet& I,
                         const IndexSet& J) {
  return rpq_matrices(path_matrix(g), I, J);
}

}  // namespace grassflow
