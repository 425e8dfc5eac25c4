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

#ifndef GRASSFLOW_ENUMERATE_HPP
#define GRASSFLOW_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "grassflow/digraph.hpp"
#include "grassflow/index_set.hpp"

namespace grassflow {

// Brute-force enumeration is the point of this layer, so it refuses graphs
// it cannot exhaust: more than kMaxEnumVertices vertices, or more emitted
// items than the configurable ceiling.
inline constexpr int kMaxEnumVertices = 12;

struct EnumLimits {
  long long max_items = 1'000'000;
};

// All self-avoiding paths a -> b, ordered by length then lexicographically
// by edge ids. For a == b this is exactly the zero-length path at a.
std::vector<Path> enumerate_simple_paths(const Digraph& g, int a, int b);

// All simple cycles avoiding the masked vertices, each rooted at its
// smallest vertex, ordered lexicographically by edge ids.
std::vector<Cycle> enumerate_simple_cycles(const Digraph& g,
                                           std::uint32_t forbidden_mask = 0);

// All collections of pairwise vertex-disjoint cycles avoiding `forbidden`,
// the empty collection first.
std::vector<CycleCollection> enumerate_cycle_collections(
    const Digraph& g, const IndexSet& forbidden, const EnumLimits& limits = {});

// Streaming form used by the identity checkers; `emitted` accumulates across
// calls so a shared ceiling can span several source/target families.
void for_each_flow(const Digraph& g, const IndexSet& A, const IndexSet& B,
                   const EnumLimits& limits, long long& emitted,
                   const std::function<void(const Flow&)>& fn);

// Self-avoiding flows from A onto B (|A| = |B|).
std::vector<Flow> enumerate_flows(const Digraph& g, const IndexSet& A,
                                  const IndexSet& B,
                                  const EnumLimits& limits = {});

// Union over all B in I with |B| = |A| (|A| even).
std::vector<Flow> enumerate_flows_free(const Digraph& g, const IndexSet& A,
                                       const IndexSet& I,
                                       const EnumLimits& limits = {});

// Union over all D in I with |B union D| = |A|; needs B disjoint from I and
// |A| + |B| even.
std::vector<Flow> enumerate_flows_mixed(const Digraph& g, const IndexSet& A,
                                        const IndexSet& B, const IndexSet& I,
                                        const EnumLimits& limits = {});

// Union over A' in I, B' in J with |A union A'| = |B union B'|, all feasible
// sizes; needs A disjoint from I and B disjoint from J.
std::vector<Flow> enumerate_flows_general(const Digraph& g, const IndexSet& A,
                                          const IndexSet& B, const IndexSet& I,
                                          const IndexSet& J,
                                          const EnumLimits& limits = {});

Rational flow_sum(const Digraph& g, const std::vector<Flow>& flows);

}  // namespace grassflow

#endif
