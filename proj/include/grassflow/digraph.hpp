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

#ifndef GRASSFLOW_DIGRAPH_HPP
#define GRASSFLOW_DIGRAPH_HPP

#include <cstdint>
#include <vector>

#include "grassflow/rational.hpp"

namespace grassflow {

// Directed multigraph on vertices 1..n. Loops and parallel edges are
// allowed; an edge is identified by its position in the edge list.
struct Edge {
  int src;
  int dst;
  Rational weight;
};

class Digraph {
 public:
  Digraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& out_edges(int v) const {
    return out_[static_cast<std::size_t>(v - 1)];
  }

  // Throws IndexOutOfRange unless 1 <= v <= n.
  void require_vertex(int v) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
};

// Self-avoiding walk given by consecutive edge ids. A path of length zero
// sits at its anchor vertex and occupies exactly that vertex.
struct Path {
  int anchor = 0;
  std::vector<int> edge_ids;

  bool trivial() const { return edge_ids.empty(); }
  int source(const Digraph& g) const;
  int target(const Digraph& g) const;
  std::uint32_t vertex_mask(const Digraph& g) const;
};

// Closed self-avoiding walk, stored rotated so that the first edge leaves
// the smallest vertex on the cycle.
struct Cycle {
  std::vector<int> edge_ids;
  std::uint32_t vertex_mask(const Digraph& g) const;
};

// Pairwise vertex-disjoint cycles; may be empty. sign = (-1)^(#cycles).
struct CycleCollection {
  std::vector<Cycle> cycles;
};

// Vertex-disjoint path system plus a cycle collection avoiding it. Path k
// starts at the k-th smallest source; target_position[k] locates its target
// inside the ascending target set, so the permutation sign is recoverable.
struct Flow {
  std::vector<Path> paths;
  std::vector<int> target_position;
  CycleCollection cycles;
};

Rational path_weight(const Digraph& g, const Path& p);
Rational cycle_weight(const Digraph& g, const Cycle& c);
Rational collection_weight(const Digraph& g, const CycleCollection& c);
int collection_sign(const CycleCollection& c);

// Sign of the permutation sending source ranks to target ranks.
int path_system_sign(const Flow& f);
int flow_sign(const Flow& f);
Rational flow_weight(const Digraph& g, const Flow& f);

}  // namespace grassflow

#endif
