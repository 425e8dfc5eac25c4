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

#include "grassflow/gaussian.hpp"

namespace grassflow {

GaussianMeasure GaussianMeasure::from_covariance(const Matrix& s) {
  if (!s.is_square() || !s.is_skew_symmetric())
    throw Error(Errc::not_skew_symmetric, "covariance must be skew-symmetric");
  if (s.rows() % 2 != 0)
    throw Error(Errc::odd_dimension, "covariance must have even dimension");
  if (s.rows() > Multivector::kMaxGenerators)
    throw Error(Errc::size_limit, "covariance too large for the Berezin route");
  Matrix s_inverse = mat_inverse(s);
  Multivector density = mv_exp(quadratic_form(s_inverse));
  Rational z = berezin_integral(density);
  if (z.is_zero())
    throw Error(Errc::zero_normalization, "measure normalizes to zero");
  return GaussianMeasure(std::move(s_inverse), std::move(density),
                         std::move(z));
}

Rational GaussianMeasure::moment(const IndexSet& I) const {
  if (I.size() % 2 != 0)
    throw Error(Errc::odd_cardinality, "moments need an even index set");
  int m = density_.generators();
  I.require_within(m, "moment index set");
  if (I.empty()) return Rational(1);
  Multivector mono = Multivector::monomial(m, I, Rational(1));
  return berezin_integral(mono * density_) / normalization_;
}

Rational gaussian_moment_pf(const Matrix& s, const IndexSet& I) {
  if (!s.is_square() || !s.is_skew_symmetric())
    throw Error(Errc::not_skew_symmetric, "covariance must be skew-symmetric");
  if (I.size() % 2 != 0)
    throw Error(Errc::odd_cardinality, "moments need an even index set");
  I.require_within(s.rows(), "moment index set");
  return pfaffian_elimination(submatrix(s, I, I));
}

}  // namespace grassflow
