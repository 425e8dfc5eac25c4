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

#include "grassflow/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "grassflow/errors.hpp"
#include "grassflow/rational.hpp"

namespace grassflow {
namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded())
    throw Error(Errc::parse_error,
                std::string("malformed JSON in ") + what + " document");
  return doc;
}

int get_int(const json& obj, const char* key, const char* what) {
  if (!obj.contains(key) || !obj[key].is_number_integer())
    throw Error(Errc::parse_error, std::string(what) +
                                       " document needs an integer \"" + key +
                                       "\" field");
  return obj[key].get<int>();
}

Rational get_rational(const json& value, const char* what) {
  if (!value.is_string())
    throw Error(Errc::parse_error,
                std::string(what) + " must be a rational string like \"2/3\"");
  return Rational::parse(value.get<std::string>());
}

}  // namespace

Digraph parse_graph(const std::string& text) {
  json doc = parse_json(text, "graph");
  if (!doc.is_object())
    throw Error(Errc::parse_error, "graph document must be a JSON object");
  const int n = get_int(doc, "n", "graph");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw Error(Errc::parse_error,
                "graph document needs an \"edges\" array");
  std::vector<Edge> edges;
  for (const json& e : doc["edges"]) {
    if (!e.is_object())
      throw Error(Errc::parse_error, "each edge must be a JSON object");
    Edge edge;
    edge.src = get_int(e, "src", "edge");
    edge.dst = get_int(e, "dst", "edge");
    if (!e.contains("weight"))
      throw Error(Errc::parse_error, "edge needs a \"weight\" field");
    edge.weight = get_rational(e["weight"], "edge weight");
    edges.push_back(edge);
  }
  return Digraph(n, edges);
}

std::string serialize_graph(const Digraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges())
    edges.push_back(
        {{"src", e.src}, {"dst", e.dst}, {"weight", e.weight.str()}});
  json doc = {{"n", g.vertex_count()}, {"edges", edges}};
  return doc.dump();
}

Matrix parse_matrix(const std::string& text) {
  json doc = parse_json(text, "matrix");
  if (!doc.is_object() || !doc.contains("entries") ||
      !doc["entries"].is_array())
    throw Error(Errc::parse_error,
                "matrix document needs an \"entries\" array of rows");
  const json& rows = doc["entries"];
  const int n = static_cast<int>(rows.size());
  int cols = 0;
  std::vector<std::vector<Rational>> parsed;
  for (const json& row : rows) {
    if (!row.is_array())
      throw Error(Errc::parse_error, "each matrix row must be an array");
    std::vector<Rational> out;
    for (const json& cell : row) out.push_back(get_rational(cell, "entry"));
    if (parsed.empty())
      cols = static_cast<int>(out.size());
    else if (static_cast<int>(out.size()) != cols)
      throw Error(Errc::parse_error, "matrix rows have unequal lengths");
    parsed.push_back(std::move(out));
  }
  Matrix m(n, parsed.empty() ? 0 : cols);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = parsed[i][j];
  return m;
}

std::string serialize_matrix(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  json doc = {{"entries", rows}};
  return doc.dump();
}

Query parse_query(const std::string& text) {
  json doc = parse_json(text, "query");
  if (!doc.is_object())
    throw Error(Errc::parse_error, "query document must be a JSON object");
  auto get_set = [&](const char* key) {
    if (!doc.contains(key)) return IndexSet{};
    if (!doc[key].is_array())
      throw Error(Errc::parse_error, std::string("query field \"") + key +
                                         "\" must be an array of indices");
    std::vector<int> values;
    for (const json& v : doc[key]) {
      if (!v.is_number_integer())
        throw Error(Errc::parse_error,
                    std::string("query field \"") + key +
                        "\" must contain integers only");
      values.push_back(v.get<int>());
    }
    return IndexSet(std::move(values));
  };
  Query q;
  q.A = get_set("A");
  q.B = get_set("B");
  q.I = get_set("I");
  q.J = get_set("J");
  return q;
}

IndexSet parse_index_list(const std::string& text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string token = text.substr(pos, comma - pos);
    if (token.empty())
      throw Error(Errc::parse_error, "empty entry in index list");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, "bad index \"" + token + "\"");
    }
    if (used != token.size())
      throw Error(Errc::parse_error, "bad index \"" + token + "\"");
    values.push_back(value);
    pos = comma + 1;
  }
  return IndexSet(std::move(values));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Errc::parse_error, "cannot read file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace grassflow
