// Copyright 2026 The Grassflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "grassflow/checkers.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "grassflow/errors.hpp"
#include "grassflow/graph_matrices.hpp"
#include "grassflow/multivector.hpp"

namespace grassflow {
namespace {

Rational signed_weight(const Digraph& g, const Flow& f) {
  Rational w = flow_weight(g, f);
  return flow_sign(f) < 0 ? -w : w;
}

// Signed sum over cycle collections, counting items into `count`. This is
// the F(emptyset, emptyset) family, so it reuses the flow enumerator.
Rational cycle_sum(const Digraph& g, const EnumLimits& limits,
                   long long& count) {
  Rational total(0);
  long long emitted = 0;
  for_each_flow(g, IndexSet{}, IndexSet{}, limits, emitted,
                [&](const Flow& f) {
                  ++count;
                  total += signed_weight(g, f);
                });
  return total;
}

void require_even_total(int r, int s) {
  if ((r + s) % 2 != 0)
    throw Error(Errc::precondition_violation,
                "|A| + |B| must be even, got " + std::to_string(r) + " + " +
                    std::to_string(s));
}

void require_below(const IndexSet& fixed, const IndexSet& open,
                   const char* fixed_name, const char* open_name) {
  if (fixed.size() > 0 && open.size() > 0 && fixed.max() >= open.min())
    throw Error(Errc::precondition_violation,
                std::string("every element of ") + fixed_name +
                    " must be smaller than every element of " + open_name);
}

void require_zero_free(const Rational& den) {
  if (den.is_zero())
    throw Error(Errc::zero_denominator,
                "signed cycle sum vanishes, the ratio is undefined");
}

// Assembles the skew block matrix [[tl, -x], [x^T, br]]. tl and br must be
// skew of sizes r x r and s x s, x of size r x s.
Matrix bordered_skew(const Matrix& tl, const Matrix& x, const Matrix& br) {
  const int r = tl.rows();
  const int s = br.rows();
  Matrix out(r + s, r + s);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out.at(i, j) = tl.at(i, j);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j) {
      out.at(i, r + j) = -x.at(i, j);
      out.at(r + j, i) = x.at(i, j);
    }
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) out.at(r + i, r + j) = br.at(i, j);
  return out;
}

// Signed sum over the families F(A cup A', B cup B') where A' runs over
// even-size subsets of I, B' over even-size subsets of J, constrained by
// |A| + |A'| = |B| + |B'|. The term for |A'| = 2t, |B'| = 2u carries
// (-1)^u, and the whole sum carries (-1)^{r(r+1)/2} with r = |A|.
Rational bordered_numerator(const Digraph& g, const IndexSet& A,
                            const IndexSet& B, const IndexSet& I,
                            const IndexSet& J, const EnumLimits& limits,
                            long long& flow_count) {
  const int r = A.size();
  const int s = B.size();
  Rational num(0);
  long long emitted = 0;
  for (int t = 0; 2 * t <= I.size(); ++t) {
    const int twice_u = r + 2 * t - s;
    if (twice_u < 0 || twice_u > J.size()) continue;
    Rational family(0);
    for_each_subset(I, 2 * t, [&](const IndexSet& extra_sources) {
      const IndexSet sources = A.union_disjoint(extra_sources);
      for_each_subset(J, twice_u, [&](const IndexSet& extra_targets) {
        const IndexSet targets = B.union_disjoint(extra_targets);
        for_each_flow(g, sources, targets, limits, emitted,
                      [&](const Flow& f) {
                        ++flow_count;
                        family += signed_weight(g, f);
                      });
      });
    });
    if ((twice_u / 2) % 2 != 0) family = -family;
    num += family;
  }
  if ((static_cast<long long>(r) * (r + 1) / 2) % 2 != 0) num = -num;
  return num;
}

}  // namespace

IdentityReport check_lgv(const Digraph& g, const IndexSet& A,
                         const IndexSet& B, const EnumLimits& limits) {
  if (A.size() != B.size())
    throw Error(Errc::cardinality_mismatch,
                "|A| = " + std::to_string(A.size()) +
                    " but |B| = " + std::to_string(B.size()));
  A.require_within(g.vertex_count(), "source vertex");
  B.require_within(g.vertex_count(), "target vertex");

  IdentityReport rep;
  rep.lhs = mat_det(submatrix(path_matrix(g), A, B));

  long long emitted = 0;
  Rational num(0);
  for_each_flow(g, A, B, limits, emitted, [&](const Flow& f) {
    ++rep.flow_count;
    num += signed_weight(g, f);
  });
  rep.rhs_numerator = num;
  rep.rhs_denominator = cycle_sum(g, limits, rep.cycle_collection_count);
  require_zero_free(rep.rhs_denominator);
  rep.equal = rep.lhs * rep.rhs_denominator == rep.rhs_numerator;
  return rep;
}

IdentityReport check_stembridge_free(const Digraph& g, const IndexSet& A,
                                     const IndexSet& I,
                                     const EnumLimits& limits) {
  if (A.size() % 2 != 0)
    throw Error(Errc::odd_cardinality,
                "|A| must be even, got " + std::to_string(A.size()));
  A.require_within(g.vertex_count(), "source vertex");
  I.require_within(g.vertex_count(), "endpoint vertex");

  const Matrix m = path_matrix(g);
  IdentityReport rep;
  rep.lhs = pfaffian_elimination(submatrix(q_matrix(m, I), A, A));

  long long emitted = 0;
  Rational num(0);
  for_each_subset(I, A.size(), [&](const IndexSet& B) {
    for_each_flow(g, A, B, limits, emitted, [&](const Flow& f) {
      ++rep.flow_count;
      num += signed_weight(g, f);
    });
  });
  rep.rhs_numerator = num;
  rep.rhs_denominator = cycle_sum(g, limits, rep.cycle_collection_count);
  require_zero_free(rep.rhs_denominator);
  rep.equal = rep.lhs * rep.rhs_denominator == rep.rhs_numerator;
  return rep;
}

IdentityReport check_stembridge_mixed(const Digraph& g, const IndexSet& A,
                                      const IndexSet& B, const IndexSet& I,
                                      const EnumLimits& limits) {
  const int r = A.size();
  const int s = B.size();
  require_even_total(r, s);
  if (s > r)
    throw Error(Errc::precondition_violation,
                "|B| = " + std::to_string(s) +
                    " must not exceed |A| = " + std::to_string(r));
  require_below(B, I, "B", "I");
  A.require_within(g.vertex_count(), "source vertex");
  B.require_within(g.vertex_count(), "fixed target vertex");
  I.require_within(g.vertex_count(), "free endpoint vertex");

  const Matrix m = path_matrix(g);
  IdentityReport rep;
  rep.lhs = pfaffian_elimination(
      bordered_skew(submatrix(q_matrix(m, I), A, A), submatrix(m, A, B),
                    Matrix(s, s)));

  long long emitted = 0;
  Rational num(0);
  for_each_subset(I, r - s, [&](const IndexSet& D) {
    const IndexSet targets = B.union_disjoint(D);
    for_each_flow(g, A, targets, limits, emitted, [&](const Flow& f) {
      ++rep.flow_count;
      num += signed_weight(g, f);
    });
  });
  // Reordering the bordered pfaffian's row convention against the flow
  // family costs (-1)^{(r-s)/2 + r(r+1)/2}.
  const long long flips =
      (r - s) / 2 + static_cast<long long>(r) * (r + 1) / 2;
  if (flips % 2 != 0) num = -num;
  rep.rhs_numerator = num;
  rep.rhs_denominator = cycle_sum(g, limits, rep.cycle_collection_count);
  require_zero_free(rep.rhs_denominator);
  rep.equal = rep.lhs * rep.rhs_denominator == rep.rhs_numerator;
  return rep;
}

IdentityReport check_general(const Digraph& g, const IndexSet& A,
                             const IndexSet& B, const IndexSet& I,
                             const IndexSet& J, const EnumLimits& limits) {
  require_even_total(A.size(), B.size());
  require_below(A, I, "A", "I");
  require_below(B, J, "B", "J");
  A.require_within(g.vertex_count(), "source vertex");
  B.require_within(g.vertex_count(), "target vertex");
  I.require_within(g.vertex_count(), "source window vertex");
  J.require_within(g.vertex_count(), "target window vertex");

  const Matrix m = path_matrix(g);
  const RpqMatrices blocks = rpq_matrices(m, I, J);

  IdentityReport rep;
  rep.lhs = pfaffian_elimination(bordered_skew(submatrix(blocks.p, A, A),
                                               submatrix(blocks.r, A, B),
                                               submatrix(blocks.q, B, B)));
  rep.rhs_numerator = bordered_numerator(g, A, B, I, J, limits,
                                         rep.flow_count);

  // Denominator: even-size subsets of the windows paired up with equal
  // cardinality, weighted by (-1)^t for |A'| = |B'| = 2t.
  Rational den(0);
  long long emitted = 0;
  const int t_cap = I.size() < J.size() ? I.size() : J.size();
  for (int t = 0; 2 * t <= t_cap; ++t) {
    Rational family(0);
    for_each_subset(I, 2 * t, [&](const IndexSet& sources) {
      for_each_subset(J, 2 * t, [&](const IndexSet& targets) {
        for_each_flow(g, sources, targets, limits, emitted,
                      [&](const Flow& f) {
                        ++rep.cycle_collection_count;
                        family += signed_weight(g, f);
                      });
      });
    });
    if (t % 2 != 0) family = -family;
    den += family;
  }
  rep.rhs_denominator = den;
  require_zero_free(rep.rhs_denominator);
  rep.equal = rep.lhs * rep.rhs_denominator == rep.rhs_numerator;
  return rep;
}

IdentityReport check_corollary(const Digraph& g, const IndexSet& A,
                               const IndexSet& B, const IndexSet& I,
                               const IndexSet& J, const EnumLimits& limits) {
  require_even_total(A.size(), B.size());
  require_below(A, I, "A", "I");
  require_below(B, J, "B", "J");
  A.require_within(g.vertex_count(), "source vertex");
  B.require_within(g.vertex_count(), "target vertex");
  I.require_within(g.vertex_count(), "source window vertex");
  J.require_within(g.vertex_count(), "target window vertex");

  const Matrix m = path_matrix(g);
  for (int i : I.indices())
    for (int j : J.indices())
      if (!m.at(i - 1, j - 1).is_zero())
        throw Error(Errc::path_exists_i_to_j,
                    "walk sum from " + std::to_string(i) + " to " +
                        std::to_string(j) + " is nonzero");

  // With no walks from I into J the correction factor is the identity, so
  // the three blocks collapse to Q^J, M and M^T B^I M.
  const Matrix tq = m.transpose() * b_matrix(g.vertex_count(), I) * m;
  IdentityReport rep;
  rep.lhs = pfaffian_elimination(
      bordered_skew(submatrix(q_matrix(m, J), A, A), submatrix(m, A, B),
                    submatrix(tq, B, B)));
  rep.rhs_numerator = bordered_numerator(g, A, B, I, J, limits,
                                         rep.flow_count);
  rep.rhs_denominator = cycle_sum(g, limits, rep.cycle_collection_count);
  require_zero_free(rep.rhs_denominator);
  rep.equal = rep.lhs * rep.rhs_denominator == rep.rhs_numerator;
  return rep;
}

PathsLemmaReport verify_paths_lemma(const Digraph& g, const IndexSet& A,
                                    const IndexSet& B,
                                    const EnumLimits& limits) {
  const int n = g.vertex_count();
  if (n > 8)
    throw Error(Errc::size_limit,
                "the integral route supports at most 8 vertices, got " +
                    std::to_string(n));
  if (A.size() != B.size())
    throw Error(Errc::cardinality_mismatch,
                "|A| = " + std::to_string(A.size()) +
                    " but |B| = " + std::to_string(B.size()));
  A.require_within(n, "source vertex");
  B.require_within(n, "target vertex");

  // Generators 1..n are the plain variables, n+1..2n the conjugates. The
  // action pairs conjugate i with plain j through -(1 - A)_{ij}.
  const Matrix one_minus_a =
      Matrix::identity(n) - adjacency_matrix(g);
  Multivector action(2 * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Rational& c = one_minus_a.at(i - 1, j - 1);
      if (c.is_zero()) continue;
      action = action + Multivector::monomial(2 * n, IndexSet{j, n + i}, -c);
    }

  Multivector integrand = Multivector::scalar(2 * n, Rational(1));
  for (int k = 0; k < A.size(); ++k) {
    integrand = integrand * Multivector::generator(2 * n, n + B[k]);
    integrand = integrand * Multivector::generator(2 * n, A[k]);
  }
  integrand = integrand * mv_exp(action);

  // Measure order: plain n, conjugate n, down to plain 1, conjugate 1.
  std::vector<int> order;
  order.reserve(2 * n);
  for (int i = n; i >= 1; --i) {
    order.push_back(i);
    order.push_back(n + i);
  }

  PathsLemmaReport rep;
  rep.lhs = berezin_ordered(integrand, order);
  rep.rhs = flow_sum(g, enumerate_flows(g, A, B, limits));
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

Rational crossing_sum(int m) {
  if (m <= 0) return Rational(1);
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> used(2 * m, false);
  long long total = 0;
  std::function<void()> rec = [&]() {
    int first = -1;
    for (int i = 0; i < 2 * m; ++i)
      if (!used[i]) {
        first = i;
        break;
      }
    if (first < 0) {
      // Pairs are generated with increasing left endpoints, so (a,b) and
      // (c,d) with a < c cross exactly when c < b < d.
      int crossings = 0;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
          if (pairs[j].first < pairs[i].second &&
              pairs[i].second < pairs[j].second)
            ++crossings;
      total += crossings % 2 == 0 ? 1 : -1;
      return;
    }
    used[first] = true;
    for (int j = first + 1; j < 2 * m; ++j) {
      if (used[j]) continue;
      used[j] = true;
      pairs.emplace_back(first, j);
      rec();
      pairs.pop_back();
      used[j] = false;
    }
    used[first] = false;
  };
  rec();
  return Rational(total);
}

}  // namespace grassflow
