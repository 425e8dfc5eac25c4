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

#include <functional>
#include <string>
#include <vector>

#include "doctest.h"
#include "grassflow/errors.hpp"
#include "grassflow/index_set.hpp"
#include "grassflow/rational.hpp"

using namespace grassflow;

namespace {

Errc thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  REQUIRE(false);
  return Errc::parse_error;
}

}  // namespace

TEST_CASE("rational parsing accepts canonical forms") {
  CHECK(Rational::parse("2/3") == Rational(2, 3));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK(Rational::parse("-4/6").str() == "-2/3");
  CHECK(Rational::parse("10/5").str() == "2");
}

TEST_CASE("rational parsing rejects malformed input") {
  CHECK(thrown_code([] { Rational::parse("1/0"); }) == Errc::parse_error);
  CHECK(thrown_code([] { Rational::parse(""); }) == Errc::parse_error);
  CHECK(thrown_code([] { Rational::parse("abc"); }) == Errc::parse_error);
  CHECK(thrown_code([] { Rational::parse("1.5"); }) == Errc::parse_error);
  CHECK(thrown_code([] { Rational::parse("+3"); }) == Errc::parse_error);
  CHECK(thrown_code([] { Rational::parse("2/"); }) == Errc::parse_error);
  CHECK(thrown_code([] { Rational::parse("/3"); }) == Errc::parse_error);
  CHECK(thrown_code([] { Rational::parse("2 / 3"); }) == Errc::parse_error);
}

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1) - Rational(1, 3) == Rational(2, 3));
  CHECK(Rational(7, 2) / Rational(7) == Rational(1, 2));
  CHECK((-Rational(3, 4)).sign() == -1);
  CHECK(Rational(0).is_zero());
  CHECK(Rational(-6, -4).str() == "3/2");
  CHECK(thrown_code([] { Rational r = Rational(1) / Rational(0); (void)r; }) ==
        Errc::zero_denominator);
}

TEST_CASE("index sets validate ordering and range") {
  const IndexSet s{2, 5, 7};
  CHECK(s.size() == 3);
  CHECK(s.contains(5));
  CHECK_FALSE(s.contains(3));
  CHECK(s.min() == 2);
  CHECK(s.max() == 7);
  CHECK(s.mask() == ((1u << 1) | (1u << 4) | (1u << 6)));
  CHECK(thrown_code([] { IndexSet bad{3, 3}; (void)bad; }) ==
        Errc::index_out_of_range);
  CHECK(thrown_code([] { IndexSet bad{5, 2}; (void)bad; }) ==
        Errc::index_out_of_range);
  CHECK(thrown_code([] { IndexSet bad{0, 1}; (void)bad; }) ==
        Errc::index_out_of_range);
  CHECK(thrown_code([&] { s.require_within(6, "set"); }) ==
        Errc::index_out_of_range);
  s.require_within(7, "set");
}

TEST_CASE("disjoint union merges or rejects") {
  const IndexSet a{1, 4};
  const IndexSet b{2, 3, 6};
  CHECK(a.disjoint_with(b));
  CHECK(a.union_disjoint(b) == IndexSet{1, 2, 3, 4, 6});
  const IndexSet c{4, 5};
  CHECK_FALSE(a.disjoint_with(c));
  CHECK(thrown_code([&] { a.union_disjoint(c); }) == Errc::overlapping_sets);
}

TEST_CASE("subset iteration is lexicographic and complete") {
  const IndexSet u{1, 3, 5, 9};
  std::vector<IndexSet> seen;
  for_each_subset(u, 2, [&](const IndexSet& s) { seen.push_back(s); });
  REQUIRE(seen.size() == 6);
  CHECK(seen.front() == IndexSet{1, 3});
  CHECK(seen[1] == IndexSet{1, 5});
  CHECK(seen.back() == IndexSet{5, 9});

  int zero_count = 0;
  for_each_subset(u, 0, [&](const IndexSet& s) {
    ++zero_count;
    CHECK(s.empty());
  });
  CHECK(zero_count == 1);

  int none = 0;
  for_each_subset(u, 5, [&](const IndexSet&) { ++none; });
  for_each_subset(u, -1, [&](const IndexSet&) { ++none; });
  CHECK(none == 0);
}

TEST_CASE("error names are stable") {
  CHECK(std::string(errc_name(Errc::parse_error)) == "ParseError");
  CHECK(std::string(errc_name(Errc::singular_system)) == "SingularSystem");
  CHECK(std::string(errc_name(Errc::singular_correction)) ==
        "SingularCorrection");
  CHECK(std::string(errc_name(Errc::path_exists_i_to_j)) ==
        "PathExistsItoJ");
  CHECK(std::string(errc_name(Errc::zero_denominator)) == "ZeroDenominator");
  CHECK(std::string(errc_name(Errc::size_limit)) == "SizeLimit");
  const Error e(Errc::odd_cardinality, "needs an even count");
  CHECK(std::string(e.what()) == "OddCardinality: needs an even count");
}
