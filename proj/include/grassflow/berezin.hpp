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

#ifndef GRASSFLOW_BEREZIN_HPP
#define GRASSFLOW_BEREZIN_HPP

#include "grassflow/matrix.hpp"
#include "grassflow/multivector.hpp"

namespace grassflow {

// Quadratic form -(1/2) x^T S x as a multivector: sum over i<j of
// (-S_ij) xi^xj. S must be skew-symmetric.
Multivector quadratic_form(const Matrix& s);

// pf(S) computed as the integral of exp(-(1/2) x^T S x) against the ordered
// measure dx1 dx2 ... dxm. Agrees with the matching-sum pfaffian.
Rational pfaffian_via_integral(const Matrix& s);

// det(M) for an n x n matrix via 2n generators: x1..xn play the plain
// variables, x_{n+1}..x_{2n} their conjugates, integrand
// exp(-sum conj_i M_ij plain_j), measure d(conj_n) d(plain_n) ...
// d(conj_1) d(plain_1).
Rational det_via_integral(const Matrix& m);

}  // namespace grassflow

#endif
