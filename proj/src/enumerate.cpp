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

#include "grassflow/enumerate.hpp"

#include <algorithm>
#include <string>

#include "grassflow/errors.hpp"

namespace grassflow {
namespace {

void require_enumerable(const Digraph& g) {
  if (g.vertex_count() > kMaxEnumVertices) {
    throw Error(Errc::size_limit,
                "enumeration supports at most " +
                    std::to_string(kMaxEnumVertices) + " vertices, got " +
                    std::to_string(g.vertex_count()));
  }
}

void count_item(const EnumLimits& limits, long long& emitted) {
  ++emitted;
  if (emitted > limits.max_items) {
    throw Error(Errc::size_limit,
                "enumeration exceeded the ceiling of " +
                    std::to_string(limits.max_items) + " items");
  }
}

void paths_dfs(const Digraph& g, int anchor, int cur, int target,
               std::uint32_t visited, std::vector<int>& edges,
               std::vector<Path>& out) {
  for (int id : g.out_edges(cur)) {
    const Edge& e = g.edge(id);
    std::uint32_t bit = std::uint32_t{1} << (e.dst - 1);
    edges.push_back(id);
    if (e.dst == target) {
      out.push_back(Path{anchor, edges});
    } else if (!(visited & bit)) {
      paths_dfs(g, anchor, e.dst, target, visited | bit, edges, out);
    }
    edges.pop_back();
  }
}

bool path_order(const Path& a, const Path& b) {
  if (a.edge_ids.size() != b.edge_ids.size()) {
    return a.edge_ids.size() < b.edge_ids.size();
  }
  return a.edge_ids < b.edge_ids;
}

// Every simple cycle is rooted at its smallest vertex by construction:
// intermediates must exceed the root, so each cycle is found exactly once
// and is already in the canonical rotation.
void cycles_dfs(const Digraph& g, int root, int cur, std::uint32_t visited,
                std::uint32_t forbidden, std::vector<int>& edges,
                std::vector<Cycle>& out) {
  for (int id : g.out_edges(cur)) {
    const Edge& e = g.edge(id);
    std::uint32_t bit = std::uint32_t{1} << (e.dst - 1);
    edges.push_back(id);
    if (e.dst == root) {
      out.push_back(Cycle{edges});
    } else if (e.dst > root && !(visited & bit) && !(forbidden & bit)) {
      cycles_dfs(g, root, e.dst, visited | bit, forbidden, edges, out);
    }
    edges.pop_back();
  }
}

// Pre-order subset walk over the cycle list; disjointness is a running
// vertex mask. The empty prefix is emitted before any extension, so the
// empty collection always comes first.
void collections_dfs(const std::vector<Cycle>& cycles, std::size_t next,
                     std::uint32_t used, std::vector<Cycle>& chosen,
                     const std::vector<std::uint32_t>& masks,
                     const std::function<void(const CycleCollection&)>& fn) {
  fn(CycleCollection{chosen});
  for (std::size_t i = next; i < cycles.size(); ++i) {
    if (masks[i] & used) {
      continue;
    }
    chosen.push_back(cycles[i]);
    collections_dfs(cycles, i + 1, used | masks[i], chosen, masks, fn);
    chosen.pop_back();
  }
}

void for_each_collection(
    const Digraph& g, std::uint32_t forbidden_mask,
    const std::function<void(const CycleCollection&)>& fn) {
  std::vector<Cycle> cycles = enumerate_simple_cycles(g, forbidden_mask);
  std::vector<std::uint32_t> masks;
  masks.reserve(cycles.size());
  for (const Cycle& c : cycles) {
    masks.push_back(c.vertex_mask(g));
  }
  std::vector<Cycle> chosen;
  collections_dfs(cycles, 0, 0, chosen, masks, fn);
}

struct FlowContext {
  const Digraph& g;
  std::vector<int> sources;
  std::vector<int> targets;
  std::vector<std::vector<std::vector<Path>>> paths;  // [source][target]
  const EnumLimits& limits;
  long long& emitted;
  const std::function<void(const Flow&)>& fn;
};

void flows_dfs(FlowContext& ctx, std::size_t si, std::uint32_t used,
               std::uint32_t used_targets, std::vector<Path>& chosen_paths,
               std::vector<int>& target_position) {
  if (si == ctx.sources.size()) {
    for_each_collection(ctx.g, used, [&](const CycleCollection& c) {
      count_item(ctx.limits, ctx.emitted);
      ctx.fn(Flow{chosen_paths, target_position, c});
    });
    return;
  }
  // `used` carries the vertices of chosen paths plus every pending source,
  // since a path through a pending source can never extend to a disjoint
  // system. The current source is its own path's first vertex, so its bit is
  // exempt from the overlap check.
  const std::uint32_t self =
      std::uint32_t{1} << (ctx.sources[si] - 1);
  for (std::size_t tj = 0; tj < ctx.targets.size(); ++tj) {
    if (used_targets & (std::uint32_t{1} << tj)) {
      continue;
    }
    for (const Path& p : ctx.paths[si][tj]) {
      std::uint32_t mask = p.vertex_mask(ctx.g);
      if (mask & (used & ~self)) {
        continue;
      }
      chosen_paths.push_back(p);
      target_position.push_back(static_cast<int>(tj));
      flows_dfs(ctx, si + 1, used | mask,
                used_targets | (std::uint32_t{1} << tj), chosen_paths,
                target_position);
      target_position.pop_back();
      chosen_paths.pop_back();
    }
  }
}

}  // namespace

std::vector<Path> enumerate_simple_paths(const Digraph& g, int a, int b) {
  require_enumerable(g);
  g.require_vertex(a);
  g.require_vertex(b);
  if (a == b) {
    return {Path{a, {}}};
  }
  std::vector<Path> out;
  std::vector<int> edges;
  paths_dfs(g, a, a, b, std::uint32_t{1} << (a - 1), edges, out);
  std::sort(out.begin(), out.end(), path_order);
  return out;
}

std::vector<Cycle> enumerate_simple_cycles(const Digraph& g,
                                           std::uint32_t forbidden_mask) {
  require_enumerable(g);
  std::vector<Cycle> out;
  std::vector<int> edges;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (forbidden_mask & (std::uint32_t{1} << (v - 1))) {
      continue;
    }
    cycles_dfs(g, v, v, std::uint32_t{1} << (v - 1), forbidden_mask, edges,
               out);
  }
  std::sort(out.begin(), out.end(), [](const Cycle& x, const Cycle& y) {
    return x.edge_ids < y.edge_ids;
  });
  return out;
}

std::vector<CycleCollection> enumerate_cycle_collections(
    const Digraph& g, const IndexSet& forbidden, const EnumLimits& limits) {
  require_enumerable(g);
  forbidden.require_within(g.vertex_count(), "forbidden vertex");
  std::vector<CycleCollection> out;
  long long emitted = 0;
  for_each_collection(g, forbidden.mask(), [&](const CycleCollection& c) {
    count_item(limits, emitted);
    out.push_back(c);
  });
  return out;
}

void for_each_flow(const Digraph& g, const IndexSet& A, const IndexSet& B,
                   const EnumLimits& limits, long long& emitted,
                   const std::function<void(const Flow&)>& fn) {
  require_enumerable(g);
  A.require_within(g.vertex_count(), "source vertex");
  B.require_within(g.vertex_count(), "target vertex");
  if (A.size() != B.size()) {
    throw Error(Errc::cardinality_mismatch,
                "flow families need |A| = |B|, got " +
                    std::to_string(A.size()) + " and " +
                    std::to_string(B.size()));
  }
  FlowContext ctx{g, A.indices(), B.indices(), {}, limits, emitted, fn};
  ctx.paths.resize(ctx.sources.size());
  for (std::size_t si = 0; si < ctx.sources.size(); ++si) {
    ctx.paths[si].resize(ctx.targets.size());
    for (std::size_t tj = 0; tj < ctx.targets.size(); ++tj) {
      ctx.paths[si][tj] =
          enumerate_simple_paths(g, ctx.sources[si], ctx.targets[tj]);
    }
  }
  std::uint32_t used = 0;
  for (int a : ctx.sources) {
    used |= std::uint32_t{1} << (a - 1);
  }
  std::vector<Path> chosen_paths;
  std::vector<int> target_position;
  flows_dfs(ctx, 0, used, 0, chosen_paths, target_position);
}

std::vector<Flow> enumerate_flows(const Digraph& g, const IndexSet& A,
                                  const IndexSet& B, const EnumLimits& limits) {
  std::vector<Flow> out;
  long long emitted = 0;
  for_each_flow(g, A, B, limits, emitted,
                [&](const Flow& f) { out.push_back(f); });
  return out;
}

std::vector<Flow> enumerate_flows_free(const Digraph& g, const IndexSet& A,
                                       const IndexSet& I,
                                       const EnumLimits& limits) {
  require_enumerable(g);
  A.require_within(g.vertex_count(), "source vertex");
  I.require_within(g.vertex_count(), "free target vertex");
  if (A.size() % 2 != 0) {
    throw Error(Errc::odd_cardinality,
                "free-target families need |A| even, got " +
                    std::to_string(A.size()));
  }
  std::vector<Flow> out;
  long long emitted = 0;
  for_each_subset(I, A.size(), [&](const IndexSet& B) {
    for_each_flow(g, A, B, limits, emitted,
                  [&](const Flow& f) { out.push_back(f); });
  });
  return out;
}

std::vector<Flow> enumerate_flows_mixed(const Digraph& g, const IndexSet& A,
                                        const IndexSet& B, const IndexSet& I,
                                        const EnumLimits& limits) {
  require_enumerable(g);
  A.require_within(g.vertex_count(), "source vertex");
  B.require_within(g.vertex_count(), "fixed target vertex");
  I.require_within(g.vertex_count(), "free target vertex");
  if (!B.disjoint_with(I)) {
    throw Error(Errc::overlapping_sets,
                "fixed targets B must be disjoint from the free set I");
  }
  if ((A.size() + B.size()) % 2 != 0) {
    throw Error(Errc::cardinality_mismatch,
                "mixed families need |A| + |B| even, got " +
                    std::to_string(A.size()) + " + " +
                    std::to_string(B.size()));
  }
  if (B.size() > A.size()) {
    throw Error(Errc::cardinality_mismatch,
                "mixed families need |B| <= |A|, got " +
                    std::to_string(B.size()) + " > " +
                    std::to_string(A.size()));
  }
  std::vector<Flow> out;
  long long emitted = 0;
  for_each_subset(I, A.size() - B.size(), [&](const IndexSet& D) {
    for_each_flow(g, A, B.union_disjoint(D), limits, emitted,
                  [&](const Flow& f) { out.push_back(f); });
  });
  return out;
}

std::vector<Flow> enumerate_flows_general(const Digraph& g, const IndexSet& A,
                                          const IndexSet& B, const IndexSet& I,
                                          const IndexSet& J,
                                          const EnumLimits& limits) {
  require_enumerable(g);
  A.require_within(g.vertex_count(), "source vertex");
  B.require_within(g.vertex_count(), "target vertex");
  I.require_within(g.vertex_count(), "free source vertex");
  J.require_within(g.vertex_count(), "free target vertex");
  if (!A.disjoint_with(I)) {
    throw Error(Errc::overlapping_sets,
                "fixed sources A must be disjoint from the free set I");
  }
  if (!B.disjoint_with(J)) {
    throw Error(Errc::overlapping_sets,
                "fixed targets B must be disjoint from the free set J");
  }
  std::vector<Flow> out;
  long long emitted = 0;
  for (int k = 0; k <= I.size(); ++k) {
    int kp = A.size() + k - B.size();
    if (kp < 0 || kp > J.size()) {
      continue;
    }
    for_each_subset(I, k, [&](const IndexSet& Ap) {
      for_each_subset(J, kp, [&](const IndexSet& Bp) {
        for_each_flow(g, A.union_disjoint(Ap), B.union_disjoint(Bp), limits,
                      emitted, [&](const Flow& f) { out.push_back(f); });
      });
    });
  }
  return out;
}

Rational flow_sum(const Digraph& g, const std::vector<Flow>& flows) {
  Rational total(0);
  for (const Flow& f : flows) {
    Rational w = flow_weight(g, f);
    if (flow_sign(f) < 0) {
      total -= w;
    } else {
      total += w;
    }
  }
  return total;
}

}  // namespace grassflow
