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

#include "grassflow/fuzz.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "grassflow/checkers.hpp"
#include "grassflow/digraph.hpp"
#include "grassflow/errors.hpp"
#include "grassflow/index_set.hpp"

namespace grassflow {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  // Uniform-ish draw in [0, bound). The raw engine output is reduced by
  // modulo so the stream does not depend on distribution internals, which
  // keeps reruns byte-identical across standard libraries.
  int next(int bound) {
    return static_cast<int>(eng() % static_cast<std::uint64_t>(bound));
  }
};

Rational random_weight(Rng& rng) {
  int num = rng.next(6) - 3;  // -3..2
  if (num >= 0) ++num;        // skip zero
  return Rational(num, rng.next(3) + 1);
}

// Selection sampling: k distinct values from [lo, hi], ascending.
IndexSet random_subset(Rng& rng, int lo, int hi, int k) {
  std::vector<int> chosen;
  int need = k;
  for (int v = lo; v <= hi && need > 0; ++v) {
    const int remaining = hi - v + 1;
    if (rng.next(remaining) < need) {
      chosen.push_back(v);
      --need;
    }
  }
  return IndexSet(std::move(chosen));
}

Digraph random_graph(Rng& rng, int n, int max_edges) {
  std::vector<Edge> edges;
  const int e = rng.next(max_edges + 1);
  for (int k = 0; k < e; ++k)
    edges.push_back(Edge{1 + rng.next(n), 1 + rng.next(n),
                         random_weight(rng)});
  return Digraph(n, edges);
}

// Graph with a vertex cut: arcs run low->low, high->high or high->low, so
// no walk leaves the low block {1..cut} for the high block.
Digraph random_cut_graph(Rng& rng, int n, int cut, int max_edges) {
  std::vector<Edge> edges;
  const int e = rng.next(max_edges + 1);
  for (int k = 0; k < e; ++k) {
    Edge edge;
    switch (rng.next(3)) {
      case 0:
        edge.src = 1 + rng.next(cut);
        edge.dst = 1 + rng.next(cut);
        break;
      case 1:
        edge.src = cut + 1 + rng.next(n - cut);
        edge.dst = cut + 1 + rng.next(n - cut);
        break;
      default:
        edge.src = cut + 1 + rng.next(n - cut);
        edge.dst = 1 + rng.next(cut);
        break;
    }
    edge.weight = random_weight(rng);
    edges.push_back(edge);
  }
  return Digraph(n, edges);
}

struct Attempt {
  bool checked = false;  // false requests a resample
  bool equal = false;
  std::string detail;
};

Attempt attempt_instance(const FuzzConfig& cfg, Rng& rng) {
  Attempt out;
  const EnumLimits limits{1'000'000};
  try {
    if (cfg.identity == "lgv") {
      const int n = 1 + rng.next(cfg.max_n);
      const Digraph g = random_graph(rng, n, 2 * n);
      const int p = rng.next(std::min(n, 3) + 1);
      const IndexSet A = random_subset(rng, 1, n, p);
      const IndexSet B = random_subset(rng, 1, n, p);
      const IdentityReport rep = check_lgv(g, A, B, limits);
      out.checked = true;
      out.equal = rep.equal;
      if (!rep.equal)
        out.detail = "lhs=" + rep.lhs.str() + " num=" +
                     rep.rhs_numerator.str() + " den=" +
                     rep.rhs_denominator.str();
      return out;
    }
    if (cfg.identity == "paths-lemma") {
      const int n = 1 + rng.next(std::min(cfg.max_n, 4));
      const Digraph g = random_graph(rng, n, 2 * n);
      const int p = rng.next(std::min(n, 2) + 1);
      const IndexSet A = random_subset(rng, 1, n, p);
      const IndexSet B = random_subset(rng, 1, n, p);
      const PathsLemmaReport rep = verify_paths_lemma(g, A, B, limits);
      out.checked = true;
      out.equal = rep.equal;
      if (!rep.equal)
        out.detail = "lhs=" + rep.lhs.str() + " rhs=" + rep.rhs.str();
      return out;
    }
    if (cfg.identity == "stembridge-free") {
      const int n = 1 + rng.next(cfg.max_n);
      const Digraph g = random_graph(rng, n, 2 * n);
      const int half = rng.next(std::min(n, 4) / 2 + 1);
      const IndexSet A = random_subset(rng, 1, n, 2 * half);
      const IndexSet I = random_subset(rng, 1, n, rng.next(n + 1));
      const IdentityReport rep = check_stembridge_free(g, A, I, limits);
      out.checked = true;
      out.equal = rep.equal;
      if (!rep.equal)
        out.detail = "lhs=" + rep.lhs.str() + " num=" +
                     rep.rhs_numerator.str() + " den=" +
                     rep.rhs_denominator.str();
      return out;
    }
    if (cfg.identity == "stembridge-mixed") {
      const int n = 1 + rng.next(cfg.max_n);
      const Digraph g = random_graph(rng, n, 2 * n);
      const int r = 1 + rng.next(std::min(n, 3));
      const int s = r - 2 * rng.next(r / 2 + 1);
      const IndexSet A = random_subset(rng, 1, n, r);
      const IndexSet B = random_subset(rng, 1, n, s);
      const int lo = B.empty() ? 1 : B.max() + 1;
      const IndexSet I =
          random_subset(rng, lo, n, rng.next(std::max(n - lo + 2, 1)));
      const IdentityReport rep = check_stembridge_mixed(g, A, B, I, limits);
      out.checked = true;
      out.equal = rep.equal;
      if (!rep.equal)
        out.detail = "lhs=" + rep.lhs.str() + " num=" +
                     rep.rhs_numerator.str() + " den=" +
                     rep.rhs_denominator.str();
      return out;
    }
    if (cfg.identity == "general" || cfg.identity == "corollary") {
      const bool corollary = cfg.identity == "corollary";
      int n = 1 + rng.next(cfg.max_n);
      int cut = 0;
      Digraph g(0, {});
      if (corollary) {
        if (n < 2) n = 2;
        cut = 1 + rng.next(n - 1);
        g = random_cut_graph(rng, n, cut, 2 * n);
      } else {
        g = random_graph(rng, n, 2 * n);
      }
      const int r = rng.next(std::min(n, 2) + 1);
      int s = rng.next(std::min(n, 2) + 1);
      if ((r + s) % 2 != 0) s = s > 0 ? s - 1 : s + 1;
      const int src_hi = corollary ? cut : n;
      const int dst_lo = corollary ? cut + 1 : 1;
      const IndexSet A = random_subset(rng, 1, src_hi, std::min(r, src_hi));
      const int i_lo = (A.empty() ? 1 : A.max() + 1);
      const IndexSet I = random_subset(
          rng, i_lo, src_hi,
          rng.next(std::max(std::min(src_hi - i_lo + 1, 2) + 1, 1)));
      const IndexSet B =
          random_subset(rng, dst_lo, n, std::min(s, n - dst_lo + 1));
      const int j_lo = (B.empty() ? dst_lo : B.max() + 1);
      const IndexSet J = random_subset(
          rng, j_lo, n, rng.next(std::max(std::min(n - j_lo + 1, 2) + 1, 1)));
      if ((A.size() + B.size()) % 2 != 0) {
        out.checked = false;  // cardinality got clamped; redraw
        return out;
      }
      const IdentityReport rep =
          corollary ? check_corollary(g, A, B, I, J, limits)
                    : check_general(g, A, B, I, J, limits);
      out.checked = true;
      out.equal = rep.equal;
      if (!rep.equal)
        out.detail = "lhs=" + rep.lhs.str() + " num=" +
                     rep.rhs_numerator.str() + " den=" +
                     rep.rhs_denominator.str();
      return out;
    }
    throw Error(Errc::parse_error, "unknown identity: " + cfg.identity);
  } catch (const Error& err) {
    switch (err.code()) {
      case Errc::singular_system:
      case Errc::singular_correction:
      case Errc::zero_denominator:
      case Errc::zero_normalization:
        out.checked = false;  // degenerate draw; resample
        return out;
      default:
        out.checked = true;
        out.equal = false;
        out.detail = std::string("error: ") + err.what();
        return out;
    }
  }
}

struct InstanceOutcome {
  bool pass = false;
  long long resamples = 0;
  std::string line;
};

InstanceOutcome run_instance(const FuzzConfig& cfg, int index) {
  InstanceOutcome out;
  Rng rng(splitmix64(cfg.seed + 0x9e3779b97f4a7c15ull *
                                    static_cast<std::uint64_t>(index + 1)));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Attempt a = attempt_instance(cfg, rng);
    if (!a.checked) {
      ++out.resamples;
      continue;
    }
    out.pass = a.equal;
    if (!a.equal)
      out.line = "instance " + std::to_string(index) + ": " + a.detail;
    return out;
  }
  out.pass = false;
  out.line = "instance " + std::to_string(index) +
             ": exhausted the resampling budget";
  return out;
}

}  // namespace

FuzzResult run_fuzz(const FuzzConfig& cfg) {
  if (cfg.identity != "lgv" && cfg.identity != "stembridge-free" &&
      cfg.identity != "stembridge-mixed" && cfg.identity != "general" &&
      cfg.identity != "corollary" && cfg.identity != "paths-lemma")
    throw Error(Errc::parse_error, "unknown identity: " + cfg.identity);
  if (cfg.count < 0 || cfg.max_n < 1 || cfg.max_n > 12)
    throw Error(Errc::parse_error, "count must be >= 0 and max-n in 1..12");

  std::vector<InstanceOutcome> outcomes(
      static_cast<std::size_t>(cfg.count));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < cfg.count; ++i)
    outcomes[static_cast<std::size_t>(i)] = run_instance(cfg, i);

  FuzzResult res;
  for (const InstanceOutcome& o : outcomes) {
    res.resamples += o.resamples;
    if (o.pass)
      ++res.passes;
    else {
      ++res.failures;
      res.failure_lines.push_back(o.line);
    }
  }
  return res;
}

std::string fuzz_summary(const FuzzConfig& cfg, const FuzzResult& res) {
  std::ostringstream out;
  out << "fuzz identity=" << cfg.identity << " seed=" << cfg.seed
      << " count=" << cfg.count << " max-n=" << cfg.max_n << "\n";
  for (const std::string& line : res.failure_lines) out << line << "\n";
  out << "passes: " << res.passes << "\n";
  out << "failures: " << res.failures << "\n";
  out << "resamples: " << res.resamples << "\n";
  out << "result: " << (res.failures == 0 ? "ok" : "FAIL") << "\n";
  return out.str();
}

}  // namespace grassflow
