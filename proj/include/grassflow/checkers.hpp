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

#ifndef GRASSFLOW_CHECKERS_HPP
#define GRASSFLOW_CHECKERS_HPP

#include "grassflow/digraph.hpp"
#include "grassflow/enumerate.hpp"
#include "grassflow/index_set.hpp"
#include "grassflow/rational.hpp"

namespace grassflow {

// Both sides of one identity instance, computed by disjoint routes: the lhs
// through exact linear algebra on the walk-sum matrix, the rhs through
// exhaustive flow enumeration. `equal` means lhs * rhs_denominator =
// rhs_numerator exactly. `flow_count` counts the flows behind the numerator;
// `cycle_collection_count` counts the items behind the denominator (for the
// ratios whose denominator is the plain cycle sum, that is exactly the
// number of cycle collections).
struct IdentityReport {
  Rational lhs;
  Rational rhs_numerator;
  Rational rhs_denominator;
  long long flow_count = 0;
  long long cycle_collection_count = 0;
  bool equal = false;
};

// det(M_AB) = (flow sum over F_{A,B}) / (cycle sum), |A| = |B|.
IdentityReport check_lgv(const Digraph& g, const IndexSet& A,
                         const IndexSet& B, const EnumLimits& limits = {});

// pf(Q^I_AA) = (flow sum over F_A^I) / (cycle sum), |A| even.
IdentityReport check_stembridge_free(const Digraph& g, const IndexSet& A,
                                     const IndexSet& I,
                                     const EnumLimits& limits = {});

// pf [[Q^I_AA, -M_AB], [M_AB^T, 0]] against the flow sum over F_{A,B}^I.
// The numerator carries the factor (-1)^{(r-s)/2 + r(r+1)/2} produced by
// reordering the moment's generators into the pairing order; it is +1
// whenever s = 0 (reducing to the free-endpoint identity) and whenever
// r = s = p with p(p+1)/2 even. Requires r + s even, s <= r and every
// element of B smaller than every element of I.
IdentityReport check_stembridge_mixed(const Digraph& g, const IndexSet& A,
                                      const IndexSet& B, const IndexSet& I,
                                      const EnumLimits& limits = {});

// pf [[P_AA, -R_AB], [R_AB^T, Q_BB]] against signed sums over the
// two-sided families F_{A u A', B u B'} with A' in I, B' in J. Expanding
// the Gaussian density restricts A', B' to even sizes and weights each
// family by (-1)^{|B'|/2}, with a global (-1)^{r(r+1)/2}; the denominator
// is sum over t of (-1)^t sum_{|A'| = |B'| = 2t} (flow sum). Requires
// r + s even, A < I and B < J elementwise.
IdentityReport check_general(const Digraph& g, const IndexSet& A,
                             const IndexSet& B, const IndexSet& I,
                             const IndexSet& J, const EnumLimits& limits = {});

// Specialization of check_general when no walk leads from I to J (verified
// as M_ij = 0 for all i in I, j in J; throws PathExistsItoJ otherwise):
// R collapses to M, P to Q^J and Q to M^T B^I M, and the denominator
// collapses to the plain cycle sum.
IdentityReport check_corollary(const Digraph& g, const IndexSet& A,
                               const IndexSet& B, const IndexSet& I,
                               const IndexSet& J,
                               const EnumLimits& limits = {});

// The two sides of the flow generating integral: lhs is the literal Berezin
// integral of [conj_B . plain_A] exp(sum conj_i (1-A)_ij plain_j) over 2n
// generators, rhs the signed weight sum over F_{A,B}.
struct PathsLemmaReport {
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

PathsLemmaReport verify_paths_lemma(const Digraph& g, const IndexSet& A,
                                    const IndexSet& B,
                                    const EnumLimits& limits = {});

// Signed count of fixed-point-free involutions of {1..2m}, each weighted by
// (-1)^{number of crossings}; equals 1 for every m >= 0.
Rational crossing_sum(int m);

}  // namespace grassflow

#endif
