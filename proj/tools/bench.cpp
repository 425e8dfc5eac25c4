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

// Times the OpenMP kernels against their serial reference twins on fixed
// random inputs and verifies exact agreement of the results.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>

#include "grassflow/matrix.hpp"
#include "grassflow/multivector.hpp"

namespace gf = grassflow;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void report(const std::string& task, double serial_ms, double parallel_ms,
            bool match) {
  std::cout << std::left << std::setw(24) << task << std::right
            << std::setw(12) << std::fixed << std::setprecision(2)
            << serial_ms << " ms" << std::setw(12) << parallel_ms << " ms"
            << std::setw(10) << std::setprecision(2)
            << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "x"
            << "   " << (match ? "exact match" : "MISMATCH") << "\n";
}

gf::Rational small_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 19) - 9;
  const long den = static_cast<long>(rng() % 9) + 1;
  return gf::Rational(num, den);
}

gf::Multivector random_multivector(std::mt19937_64& rng, int m, int terms) {
  gf::Multivector out(m);
  for (int k = 0; k < terms; ++k) {
    const std::uint32_t mask =
        static_cast<std::uint32_t>(rng()) & ((1u << m) - 1u);
    std::vector<int> ix;
    for (int i = 1; i <= m; ++i)
      if (mask & (1u << (i - 1))) ix.push_back(i);
    out = out + gf::Multivector::monomial(m, gf::IndexSet(std::move(ix)),
                                          small_rational(rng));
  }
  return out;
}

gf::Matrix random_matrix(std::mt19937_64& rng, int n) {
  gf::Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = small_rational(rng);
  return m;
}

gf::Matrix random_skew(std::mt19937_64& rng, int n) {
  gf::Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m.at(i, j) = small_rational(rng);
      m.at(j, i) = -m.at(i, j);
    }
  return m;
}

}  // namespace

int main() {
  std::mt19937_64 rng(20260815u);

  {
    const int m = 20;
    const gf::Multivector a = random_multivector(rng, m, 512);
    const gf::Multivector b = random_multivector(rng, m, 512);
    auto t0 = Clock::now();
    const gf::Multivector ps = gf::serial::mv_mul(a, b);
    const double serial_ms = ms_since(t0);
    t0 = Clock::now();
    const gf::Multivector pp = a * b;
    const double parallel_ms = ms_since(t0);
    report("multivector product", serial_ms, parallel_ms, ps == pp);
  }

  {
    const gf::Matrix s = random_skew(rng, 14);
    auto t0 = Clock::now();
    const gf::Rational vs = gf::serial::pfaffian_combinatorial(s);
    const double serial_ms = ms_since(t0);
    t0 = Clock::now();
    const gf::Rational vp = gf::pfaffian_combinatorial(s);
    const double parallel_ms = ms_since(t0);
    report("pfaffian m=14", serial_ms, parallel_ms, vs == vp);
  }

  {
    const gf::Matrix m = random_matrix(rng, 64);
    auto t0 = Clock::now();
    const gf::Rational vs = gf::serial::mat_det(m);
    const double serial_ms = ms_since(t0);
    t0 = Clock::now();
    const gf::Rational vp = gf::mat_det(m);
    const double parallel_ms = ms_since(t0);
    report("determinant n=64", serial_ms, parallel_ms, vs == vp);
  }

  return 0;
}
