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

#ifndef GRASSFLOW_GRAPH_MATRICES_HPP
#define GRASSFLOW_GRAPH_MATRICES_HPP

#include "grassflow/digraph.hpp"
#include "grassflow/index_set.hpp"
#include "grassflow/matrix.hpp"

namespace grassflow {

// A_ij = sum of the weights of all edges i -> j (parallel edges summed,
// loops on the diagonal).
Matrix adjacency_matrix(const Digraph& g);

// Walk-sum matrix M = (1 - A)^{-1}; entry (i, j) sums the weights of all
// walks i -> j, self-intersecting ones included. Throws SingularSystem when
// the geometric series has no rational value.
Matrix path_matrix(const Digraph& g);

// Skew matrix with entries sum over k < l in I of (M_ik M_jl - M_il M_jk),
// computed entrywise from that formula (the product form m * b * m^T is an
// algebraic consequence checked in tests, not the definition used here).
Matrix q_matrix(const Matrix& m, const IndexSet& I);
Matrix q_matrix(const Digraph& g, const IndexSet& I);

// Skew indicator of ordered pairs inside K: +1 at (i, j) when i, j in K and
// i < j, -1 when i > j, 0 elsewhere.
Matrix b_matrix(int n, const IndexSet& K);

struct RpqMatrices {
  Matrix r;  // M (1 + B^J M^T B^I M)^{-1}
  Matrix p;  // M B^J R^T, skew
  Matrix q;  // M^T B^I R, skew
};

// Throws SingularCorrection when the inner inverse does not exist.
RpqMatrices rpq_matrices(const Matrix& m, const IndexSet& I, const IndexSet& J);
RpqMatrices rpq_matrices(const Digraph& g, const IndexSet& I, const IndexSet& J);

}  // namespace grassflow

#endif
