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

#ifndef GRASSFLOW_ERRORS_HPP
#define GRASSFLOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grassflow {

// Every failure the library can signal has a stable name; the CLI prints the
// name and exits 2. Verdicts (equal / not equal) are never errors.
enum class Errc {
  parse_error,
  index_out_of_range,
  singular_matrix,
  not_skew_symmetric,
  odd_dimension,
  generator_count_mismatch,
  nonzero_scalar_term,
  zero_normalization,
  singular_system,
  singular_correction,
  cardinality_mismatch,
  odd_cardinality,
  overlapping_sets,
  size_limit,
  zero_denominator,
  precondition_violation,
  path_exists_i_to_j,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  Errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace grassflow

#endif
