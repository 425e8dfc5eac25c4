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

#include "grassflow/errors.hpp"

namespace grassflow {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::parse_error: return "ParseError";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::singular_matrix: return "SingularMatrix";
    case Errc::not_skew_symmetric: return "NotSkewSymmetric";
    case Errc::odd_dimension: return "OddDimension";
    case Errc::generator_count_mismatch: return "GeneratorCountMismatch";
    case Errc::nonzero_scalar_term: return "NonzeroScalarTerm";
    case Errc::zero_normalization: return "ZeroNormalization";
    case Errc::singular_system: return "SingularSystem";
    case Errc::singular_correction: return "SingularCorrection";
    case Errc::cardinality_mismatch: return "CardinalityMismatch";
    case Errc::odd_cardinality: return "OddCardinality";
    case Errc::overlapping_sets: return "OverlappingSets";
    case Errc::size_limit: return "SizeLimit";
    case Errc::zero_denominator: return "ZeroDenominator";
    case Errc::precondition_violation: return "PreconditionViolation";
    case Errc::path_exists_i_to_j: return "PathExistsItoJ";
  }
  return "UnknownError";
}

}  // namespace grassflow
