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

#ifndef GRASSFLOW_FUZZ_HPP
#define GRASSFLOW_FUZZ_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace grassflow {

// Randomized cross-checking of one identity on many generated instances.
// Instances are derived purely from (seed, index), so a rerun with the same
// configuration reproduces every graph, every vertex set and the summary
// byte for byte, independent of thread count.
struct FuzzConfig {
  std::string identity = "lgv";  // lgv | stembridge-free | stembridge-mixed |
                                 // general | corollary | paths-lemma
  std::uint64_t seed = 1;
  int count = 100;
  int max_n = 5;
};

struct FuzzResult {
  int passes = 0;
  int failures = 0;
  long long resamples = 0;  // instances redrawn after benign errors
  std::vector<std::string> failure_lines;
};

FuzzResult run_fuzz(const FuzzConfig& cfg);

// Deterministic multi-line report ending in "result: ok" or "result: FAIL".
std::string fuzz_summary(const FuzzConfig& cfg, const FuzzResult& res);

}  // namespace grassflow

#endif
