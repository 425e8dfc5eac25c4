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

#include "grassflow/index_set.hpp"

#include <algorithm>
#include <string>

namespace grassflow {

IndexSet::IndexSet(std::vector<int> indices) : ix_(std::move(indices)) {
  for (std::size_t k = 0; k < ix_.size(); ++k) {
    if (ix_[k] < 1)
      throw Error(Errc::index_out_of_range,
                  "index " + std::to_string(ix_[k]) + " is not positive");
    if (k > 0 && ix_[k] <= ix_[k - 1])
      throw Error(Errc::index_out_of_range,
                  "indices must be strictly increasing");
  }
}

IndexSet IndexSet::full(int n) {
  std::vector<int> v(static_cast<std::size_t>(n > 0 ? n : 0));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return IndexSet(std::move(v));
}

bool IndexSet::contains(int i) const {
  return std::binary_search(ix_.begin(), ix_.end(), i);
}

void IndexSet::require_within(int ambient, const char* what) const {
  if (!ix_.empty() && ix_.back() > ambient)
    throw Error(Errc::index_out_of_range,
                std::string(what) + " contains " + std::to_string(ix_.back()) +
                    " but the ambient size is " + std::to_string(ambient));
}

bool IndexSet::disjoint_with(const IndexSet& other) const {
  std::size_t a = 0, b = 0;
  while (a < ix_.size() && b < other.ix_.size()) {
    if (ix_[a] == other.ix_[b]) return false;
    if (ix_[a] < other.ix_[b]) ++a; else ++b;
  }
  return true;
}

IndexSet IndexSet::union_disjoint(const IndexSet& other) const {
  if (!disjoint_with(other))
    throw Error(Errc::overlapping_sets, "sets are not disjoint");
  std::vector<int> merged;
  merged.reserve(ix_.size() + other.ix_.size());
  std::merge(ix_.begin(), ix_.end(), other.ix_.begin(), other.ix_.end(),
             std::back_inserter(merged));
  return IndexSet(std::move(merged));
}

std::uint32_t IndexSet::mask() const {
  std::uint32_t m = 0;
  for (int i : ix_) {
    if (i > 32)
      throw Error(Errc::index_out_of_range, "index too large for a mask");
    m |= 1u << (i - 1);
  }
  return m;
}

void for_each_subset(const IndexSet& universe, int k,
                     const std::function<void(const IndexSet&)>& fn) {
  if (k < 0 || k > universe.size()) return;
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  // Plain combinations recursion; order follows positions in `universe`.
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(chosen.size()) == k) {
      fn(IndexSet(chosen));
      return;
    }
    int need = k - static_cast<int>(chosen.size());
    for (int pos = from; pos <= universe.size() - need; ++pos) {
      chosen.push_back(universe[pos]);
      rec(pos + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

}  // namespace grassflow
