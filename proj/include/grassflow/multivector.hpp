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

#ifndef GRASSFLOW_MULTIVECTOR_HPP
#define GRASSFLOW_MULTIVECTOR_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "grassflow/index_set.hpp"
#include "grassflow/rational.hpp"

namespace grassflow {

// Element of the exterior algebra on m anticommuting generators x1..xm,
// stored sparsely: monomial = bitmask over generators (bit i-1 for xi, the
// indices of a stored monomial being implicitly in increasing order),
// coefficient = nonzero Rational. The zero coefficient is never stored.
class Multivector {
 public:
  static constexpr int kMaxGenerators = 30;

  explicit Multivector(int generators);

  static Multivector scalar(int generators, const Rational& c);
  static Multivector generator(int generators, int i);  // xi, 1-based
  static Multivector monomial(int generators, const IndexSet& ix,
                              const Rational& c);

  int generators() const { return m_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Coefficient of the monomial with the given generator mask (0 if absent).
  Rational coefficient(std::uint32_t mask) const;

  // Terms sorted by degree, then lexicographically by index sequence.
  std::vector<std::pair<std::uint32_t, Rational>> sorted_terms() const;

  Multivector operator-() const;
  friend Multivector operator+(const Multivector& a, const Multivector& b);
  friend Multivector operator-(const Multivector& a, const Multivector& b);
  friend Multivector operator*(const Multivector& a, const Multivector& b);
  friend Multivector operator*(const Rational& c, const Multivector& a);
  friend bool operator==(const Multivector& a, const Multivector& b);

  friend Multivector mv_mul_impl(const Multivector& a, const Multivector& b,
                                 bool threaded);

 private:
  void add_term(std::uint32_t mask, const Rational& c);

  int m_;
  std::unordered_map<std::uint32_t, Rational> terms_;
};

// Sign picked up when merging two disjoint increasing monomials: parity of
// the number of generator pairs (x in a, y in b) with x > y.
int merge_sign(std::uint32_t a, std::uint32_t b);

// exp(f) = sum f^p / p!; terminates because f has no scalar term (throws
// NonzeroScalarTerm otherwise) so f^p vanishes for p > generators.
Multivector mv_exp(const Multivector& f);

// Coefficient of the top monomial x1^...^xm, i.e. the integral against the
// measure dxm...dx1 (the innermost differential pairs with x1 first).
Rational berezin_integral(const Multivector& f);

// Integral against the ordered measure dx_{g1} dx_{g2} ... dx_{gm} for an
// arbitrary arrangement g of all generators; differentials anticommute, the
// rightmost acts first.
Rational berezin_ordered(const Multivector& f, const std::vector<int>& order);

std::string to_string(const Multivector& f);

namespace serial {
Multivector mv_mul(const Multivector& a, const Multivector& b);
}

}  // namespace grassflow

#endif
