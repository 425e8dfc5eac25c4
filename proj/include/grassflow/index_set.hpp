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

#ifndef GRASSFLOW_INDEX_SET_HPP
#define GRASSFLOW_INDEX_SET_HPP

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "grassflow/errors.hpp"

namespace grassflow {

// Finite set of 1-based indices kept strictly increasing. Used for matrix
// row/column selections, Grassmann monomials and vertex sets alike.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<int> indices);
  IndexSet(std::initializer_list<int> indices)
      : IndexSet(std::vector<int>(indices)) {}

  static IndexSet full(int n);  // {1, ..., n}

  int size() const { return static_cast<int>(ix_.size()); }
  bool empty() const { return ix_.empty(); }
  int operator[](int k) const { return ix_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& indices() const { return ix_; }

  auto begin() const { return ix_.begin(); }
  auto end() const { return ix_.end(); }

  bool contains(int i) const;
  int min() const { return ix_.front(); }
  int max() const { return ix_.back(); }

  // Throws IndexOutOfRange unless every element lies in [1, ambient].
  void require_within(int ambient, const char* what) const;

  bool disjoint_with(const IndexSet& other) const;

  // Merge of two disjoint sets; throws OverlappingSets on intersection.
  IndexSet union_disjoint(const IndexSet& other) const;

  // Bitmask with bit (i-1) set per element; elements must be <= 32.
  std::uint32_t mask() const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.ix_ == b.ix_;
  }

 private:
  std::vector<int> ix_;
};

// Calls fn for every k-element subset of `universe`, in lexicographic order
// of the chosen index positions.
void for_each_subset(const IndexSet& universe, int k,
                     const std::function<void(const IndexSet&)>& fn);

}  // namespace grassflow

#endif
