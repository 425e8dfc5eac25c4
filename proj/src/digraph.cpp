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

#include "grassflow/digraph.hpp"

#include <string>

#include "grassflow/errors.hpp"

namespace grassflow {

Digraph::Digraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw Error(Errc::index_out_of_range, "negative vertex count");
  out_.resize(static_cast<std::size_t>(n));
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    if (e.src < 1 || e.src > n || e.dst < 1 || e.dst > n)
      throw Error(Errc::index_out_of_range,
                  "edge " + std::to_string(id) + " endpoints outside 1.." +
                      std::to_string(n));
    out_[static_cast<std::size_t>(e.src - 1)].push_back(static_cast<int>(id));
  }
}

void Digraph::require_vertex(int v) const {
  if (v < 1 || v > n_)
    throw Error(Errc::index_out_of_range,
                "vertex " + std::to_string(v) + " outside 1.." +
                    std::to_string(n_));
}

int Path::source(const Digraph& g) const {
  return trivial() ? anchor : g.edge(edge_ids.front()).src;
}

int Path::target(const Digraph& g) const {
  return trivial() ? anchor : g.edge(edge_ids.back()).dst;
}

std::uint32_t Path::vertex_mask(const Digraph& g) const {
  if (trivial()) return 1u << (anchor - 1);
  std::uint32_t m = 1u << (g.edge(edge_ids.front()).src - 1);
  for (int id : edge_ids) m |= 1u << (g.edge(id).dst - 1);
  return m;
}

std::uint32_t Cycle::vertex_mask(const Digraph& g) const {
  std::uint32_t m = 0;
  for (int id : edge_ids) m |= 1u << (g.edge(id).dst - 1);
  return m;
}

Rational path_weight(const Digraph& g, const Path& p) {
  Rational w(1);
  for (int id : p.edge_ids) w *= g.edge(id).weight;
  return w;
}

Rational cycle_weight(const Digraph& g, const Cycle& c) {
  Rational w(1);
  for (int id : c.edge_ids) w *= g.edge(id).weight;
  return w;
}

Rational collection_weight(const Digraph& g, const CycleCollection& c) {
  Rational w(1);
  for (const Cycle& cy : c.cycles) w *= cycle_weight(g, cy);
  return w;
}

int collection_sign(const CycleCollection& c) {
  return c.cycles.size() % 2 == 0 ? 1 : -1;
}

int path_system_sign(const Flow& f) {
  int inversions = 0;
  for (std::size_t i = 0; i < f.target_position.size(); ++i)
    for (std::size_t j = i + 1; j < f.target_position.size(); ++j)
      if (f.target_position[i] > f.target_position[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

int flow_sign(const Flow& f) {
  return path_system_sign(f) * collection_sign(f.cycles);
}

Rational flow_weight(const Digraph& g, const Flow& f) {
  Rational w(1);
  for (const Path& p : f.paths) w *= path_weight(g, p);
  return w * collection_weight(g, f.cycles);
}

}  // namespace grassflow
