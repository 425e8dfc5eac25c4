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

#ifndef GRASSFLOW_IO_HPP
#define GRASSFLOW_IO_HPP

#include <string>

#include "grassflow/digraph.hpp"
#include "grassflow/index_set.hpp"
#include "grassflow/matrix.hpp"

namespace grassflow {

// Graph document:
//   {"n": 2, "edges": [{"src": 1, "dst": 2, "weight": "2/3"}]}
// Weights are canonical rational strings; binary floats never appear.
Digraph parse_graph(const std::string& text);
std::string serialize_graph(const Digraph& g);

// Matrix document, row-major entries as rational strings:
//   {"entries": [["0", "-5"], ["5", "0"]]}
Matrix parse_matrix(const std::string& text);
std::string serialize_matrix(const Matrix& m);

// Vertex-set document; absent keys default to the empty set:
//   {"A": [1, 2], "B": [3, 4]}
struct Query {
  IndexSet A, B, I, J;
};
Query parse_query(const std::string& text);

// Comma-separated strictly increasing 1-based indices; "" is empty.
IndexSet parse_index_list(const std::string& text);

// Whole-file slurp; throws ParseError when the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace grassflow

#endif
