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

#include "grassflow/multivector.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace grassflow {

namespace {

std::vector<int> mask_indices(std::uint32_t mask) {
  std::vector<int> ix;
  while (mask) {
    int b = std::countr_zero(mask);
    ix.push_back(b + 1);
    mask &= mask - 1;
  }
  return ix;
}

}  // namespace

Multivector::Multivector(int generators) : m_(generators) {
  if (generators < 0 || generators > kMaxGenerators)
    throw Error(Errc::size_limit,
                "generator count must lie in [0, " +
                    std::to_string(kMaxGenerators) + "]");
}

Multivector Multivector::scalar(int generators, const Rational& c) {
  Multivector f(generators);
  f.add_term(0, c);
  return f;
}

Multivector Multivector::generator(int generators, int i) {
  Multivector f(generators);
  if (i < 1 || i > generators)
    throw Error(Errc::index_out_of_range,
                "generator " + std::to_string(i) + " of " +
                    std::to_string(generators));
  f.add_term(1u << (i - 1), Rational(1));
  return f;
}

Multivector Multivector::monomial(int generators, const IndexSet& ix,
                                  const Rational& c) {
  Multivector f(generators);
  ix.require_within(generators, "monomial");
  f.add_term(ix.mask(), c);
  return f;
}

void Multivector::add_term(std::uint32_t mask, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(mask);
  if (it == terms_.end()) {
    terms_.emplace(mask, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational Multivector::coefficient(std::uint32_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<std::uint32_t, Rational>> Multivector::sorted_terms()
    const {
  std::vector<std::pair<std::uint32_t, Rational>> v(terms_.begin(),
                                                    terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    int da = std::popcount(a.first), db = std::popcount(b.first);
    if (da != db) return da < db;
    return mask_indices(a.first) < mask_indices(b.first);
  });
  return v;
}

int merge_sign(std::uint32_t a, std::uint32_t b) {
  int inversions = 0;
  std::uint32_t rest = b;
  while (rest) {
    int y = std::countr_zero(rest);
    inversions += std::popcount(a >> (y + 1));
    rest &= rest - 1;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Multivector Multivector::operator-() const {
  Multivector r(m_);
  for (const auto& [mask, c] : terms_) r.terms_.emplace(mask, -c);
  return r;
}

namespace {

void require_same_algebra(const Multivector& a, const Multivector& b) {
  if (a.generators() != b.generators())
    throw Error(Errc::generator_count_mismatch,
                std::to_string(a.generators()) + " vs " +
                    std::to_string(b.generators()) + " generators");
}

}  // namespace

Multivector operator+(const Multivector& a, const Multivector& b) {
  require_same_algebra(a, b);
  Multivector r = a;
  for (const auto& [mask, c] : b.terms_) r.add_term(mask, c);
  return r;
}

Multivector operator-(const Multivector& a, const Multivector& b) {
  require_same_algebra(a, b);
  Multivector r = a;
  for (const auto& [mask, c] : b.terms_) r.add_term(mask, -c);
  return r;
}

Multivector operator*(const Rational& c, const Multivector& a) {
  Multivector r(a.generators());
  if (c.is_zero()) return r;
  for (const auto& [mask, v] : a.terms_) r.terms_.emplace(mask, c * v);
  return r;
}

Multivector mv_mul_impl(const Multivector& a, const Multivector& b,
                        bool threaded) {
  require_same_algebra(a, b);
  Multivector r(a.generators());

  const std::size_t pairs = a.terms_.size() * b.terms_.size();
  bool run_parallel = false;
#ifdef _OPENMP
  run_parallel = threaded && pairs >= 16384 && omp_get_max_threads() > 1;
#else
  (void)threaded;
  (void)pairs;
#endif

  if (!run_parallel) {
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        if (ma & mb) continue;  // shared generator: the product vanishes
        Rational c = ca * cb;
        if (merge_sign(ma, mb) < 0) c = -c;
        r.add_term(ma | mb, c);
      }
    }
    return r;
  }

#ifdef _OPENMP
  // Split a's terms across threads with private accumulators; merging
  // afterwards yields the same coefficients as the serial loop because
  // rational addition is exact and commutative.
  std::vector<std::pair<std::uint32_t, Rational>> left(a.terms_.begin(),
                                                       a.terms_.end());
  int nthreads = omp_get_max_threads();
  std::vector<Multivector> partial(static_cast<std::size_t>(nthreads),
                                   Multivector(a.generators()));
#pragma omp parallel num_threads(nthreads)
  {
    Multivector& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(left.size());
         ++k) {
      const auto& [ma, ca] = left[static_cast<std::size_t>(k)];
      for (const auto& [mb, cb] : b.terms_) {
        if (ma & mb) continue;
        Rational c = ca * cb;
        if (merge_sign(ma, mb) < 0) c = -c;
        mine.add_term(ma | mb, c);
      }
    }
  }
  for (const Multivector& p : partial)
    for (const auto& [mask, c] : p.terms_) r.add_term(mask, c);
#endif
  return r;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  return mv_mul_impl(a, b, true);
}

Multivector serial::mv_mul(const Multivector& a, const Multivector& b) {
  return mv_mul_impl(a, b, false);
}

bool operator==(const Multivector& a, const Multivector& b) {
  if (a.m_ != b.m_ || a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [mask, c] : a.terms_) {
    auto it = b.terms_.find(mask);
    if (it == b.terms_.end() || it->second != c) return false;
  }
  return true;
}

Multivector mv_exp(const Multivector& f) {
  if (!f.coefficient(0).is_zero())
    throw Error(Errc::nonzero_scalar_term,
                "exp is only defined for vanishing scalar term");
  Multivector acc = Multivector::scalar(f.generators(), Rational(1));
  Multivector power = acc;
  // f^p has degree >= p, so the loop stops after at most m rounds.
  for (long p = 1; p <= f.generators(); ++p) {
    power = power * f;
    if (power.is_zero()) break;
    power = Rational(1, p) * power;
    acc = acc + power;
  }
  return acc;
}

Rational berezin_integral(const Multivector& f) {
  std::uint32_t full =
      f.generators() == 0 ? 0u : (~0u >> (32 - f.generators()));
  return f.coefficient(full);
}

Rational berezin_ordered(const Multivector& f, const std::vector<int>& order) {
  int m = f.generators();
  if (static_cast<int>(order.size()) != m)
    throw Error(Errc::generator_count_mismatch,
                "measure must list every generator exactly once");
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (int g : order) {
    if (g < 1 || g > m || seen[static_cast<std::size_t>(g)])
      throw Error(Errc::generator_count_mismatch,
                  "measure must list every generator exactly once");
    seen[static_cast<std::size_t>(g)] = true;
  }
  // Only the top monomial survives a full measure; simulate the left
  // derivatives on it to pick up the sign, rightmost differential first.
  std::vector<int> seq(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) seq[static_cast<std::size_t>(i)] = i + 1;
  int sign = 1;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto pos = std::find(seq.begin(), seq.end(), *it);
    if ((pos - seq.begin()) % 2 != 0) sign = -sign;
    seq.erase(pos);
  }
  Rational top = berezin_integral(f);
  return sign > 0 ? top : -top;
}

std::string to_string(const Multivector& f) {
  auto terms = f.sorted_terms();
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c] : terms) {
    Rational a = c;
    if (first) {
      if (a.sign() < 0) { os << "-"; a = -a; }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    if (mask == 0) {
      os << a.str();
    } else {
      if (a != Rational(1)) os << a.str() << "*";
      bool first_gen = true;
      for (int i : mask_indices(mask)) {
        if (!first_gen) os << "^";
        os << "x" << i;
        first_gen = false;
      }
    }
    first = false;
  }
  return os.str();
}

}  // namespace grassflow
