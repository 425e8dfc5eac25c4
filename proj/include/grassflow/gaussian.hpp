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

#ifndef GRASSFLOW_GAUSSIAN_HPP
#define GRASSFLOW_GAUSSIAN_HPP

#include "grassflow/berezin.hpp"
#include "grassflow/matrix.hpp"
#include "grassflow/multivector.hpp"

namespace grassflow {

// Grassmann Gaussian measure with covariance S (invertible, skew, 2n x 2n):
// density exp(-(1/2) x^T S^{-1} x) divided by its own full integral. Moments
// are computed by honest division, never through pfaffians, so they can be
// cross-checked against the pfaffian route.
class GaussianMeasure {
 public:
  static GaussianMeasure from_covariance(const Matrix& s);

  // Integral of the monomial x_{i1}...x_{ik} (I ascending, |I| even).
  Rational moment(const IndexSet& I) const;

  const Matrix& s_inverse() const { return s_inverse_; }
  const Rational& normalization() const { return normalization_; }

 private:
  GaussianMeasure(Matrix s_inverse, Multivector density, Rational z)
      : s_inverse_(std::move(s_inverse)),
        density_(std::move(density)),
        normalization_(std::move(z)) {}

  Matrix s_inverse_;
  Multivector density_;
  Rational normalization_;
};

// Wick value of the same moment: pf(S_II), via elimination. Independent of
// the Berezin route above.
Rational gaussian_moment_pf(const Matrix& s, const IndexSet& I);

}  // namespace grassflow

#endif
