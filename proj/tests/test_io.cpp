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

#include "doctest.h"
#include "grassflow/errors.hpp"
#include "grassflow/fuzz.hpp"
#include "grassflow/io.hpp"

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

TEST_CASE("graph documents round-trip byte for byte") {
  const std::string text =
      R"({"n": 3, "edges": [{"src": 1, "dst": 2, "weight": "2/3"},)"
      R"( {"src": 2, "dst": 2, "weight": "-1/5"}]})";
  const Digraph g = parse_graph(text);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.edge(0).weight == Rational(2, 3));
  CHECK(g.edge(1).src == 2);
  const std::string once = serialize_graph(g);
  CHECK(serialize_graph(parse_graph(once)) == once);
}

TEST_CASE("graph documents reject malformed input") {
  CHECK(thrown_code([] { parse_graph("{"); }) == Errc::parse_error);
  CHECK(thrown_code([] { parse_graph(R"({"edges": []})"); }) ==
        Errc::parse_error);
  CHECK(thrown_code([] { parse_graph(R"({"n": 1, "edges": 3})"); }) ==
        Errc::parse_error);
  CHECK(thrown_code([] {
          parse_graph(
              R"({"n": 1, "edges": [{"src": 1, "dst": 1, "weight": "1/0"}]})");
        }) == Errc::parse_error);
  CHECK(thrown_code([] {
          parse_graph(
              R"({"n": 1, "edges": [{"src": 1, "dst": 1, "weight": 0.5}]})");
        }) == Errc::parse_error);
  CHECK(thrown_code([] {
          parse_graph(
              R"({"n": 1, "edges": [{"src": 2, "dst": 1, "weight": "1"}]})");
        }) == Errc::index_out_of_range);
}

TEST_CASE("matrix documents round-trip and validate shape") {
  const Matrix m = parse_matrix(R"({"entries": [["0", "-5"], ["5", "0"]]})");
  CHECK(m.rows() == 2);
  CHECK(m.at(0, 1) == Rational(-5));
  const std::string once = serialize_matrix(m);
  CHECK(serialize_matrix(parse_matrix(once)) == once);
  CHECK(thrown_code([] {
          parse_matrix(R"({"entries": [["0", "1"], ["2"]]})");
        }) == Errc::parse_error);
  CHECK(thrown_code([] { parse_matrix(R"({"entries": "x"})"); }) ==
        Errc::parse_error);
}

TEST_CASE("query documents default absent keys to empty sets") {
  const Query q = parse_query(R"({"A": [1, 3], "J": [2]})");
  CHECK(q.A == IndexSet{1, 3});
  CHECK(q.B == IndexSet{});
  CHECK(q.I == IndexSet{});
  CHECK(q.J == IndexSet{2});
  CHECK(thrown_code([] { parse_query(R"({"A": [0]})"); }) ==
        Errc::index_out_of_range);
  CHECK(thrown_code([] { parse_query(R"({"A": "1"})"); }) ==
        Errc::parse_error);
}

TEST_CASE("index lists parse commas strictly") {
  CHECK(parse_index_list("") == IndexSet{});
  CHECK(parse_index_list("4") == IndexSet{4});
  CHECK(parse_index_list("1,2,5") == IndexSet{1, 2, 5});
  CHECK(thrown_code([] { parse_index_list("1,,2"); }) == Errc::parse_error);
  CHECK(thrown_code([] { parse_index_list("1,a"); }) == Errc::parse_error);
  CHECK(thrown_code([] { parse_index_list("2,1"); }) ==
        Errc::index_out_of_range);
}

TEST_CASE("missing files surface as parse errors with the path") {
  try {
    read_file("/nonexistent/grassflow-io-test.json");
    REQUIRE(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    CHECK(std::string(e.what()).find("grassflow-io-test") !=
          std::string::npos);
  }
}

TEST_CASE("fuzz summaries are deterministic and clean on small runs") {
  FuzzConfig cfg;
  cfg.identity = "lgv";
  cfg.seed = 7;
  cfg.count = 10;
  cfg.max_n = 4;
  const FuzzResult a = run_fuzz(cfg);
  const FuzzResult b = run_fuzz(cfg);
  CHECK(fuzz_summary(cfg, a) == fuzz_summary(cfg, b));
  CHECK(a.failures == 0);
  CHECK(a.passes == 10);

  FuzzConfig mixed = cfg;
  mixed.identity = "stembridge-mixed";
  mixed.count = 6;
  const FuzzResult c = run_fuzz(mixed);
  CHECK(c.failures == 0);

  FuzzConfig bad = cfg;
  bad.identity = "unknown";
  CHECK(thrown_code([&] { run_fuzz(bad); }) == Errc::parse_error);
}
