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

#include "grassflow/rational.hpp"

#include <cctype>
#include <ostream>

namespace grassflow {

Rational::Rational(long n, long d) : v_(n, d) {
  if (d == 0) throw Error(Errc::parse_error, "zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::zero_denominator, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

// Accepted forms: optional '-', digits, optionally '/digits'. The value is
// reduced on the way in, so non-canonical input like "2/4" is fine; "1/0"
// is not.
Rational Rational::parse(const std::string& text) {
  const auto bad = [&]() -> Error {
    return Error(Errc::parse_error, "not a rational: \"" + text + "\"");
  };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) throw bad();
  std::string num = text.substr(0, i);
  std::string den = "1";
  if (i < text.size()) {
    if (text[i] != '/') throw bad();
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) throw bad();
    den = text.substr(den_begin);
  }
  mpz_class n(num), d(den);
  if (d == 0) throw Error(Errc::parse_error, "zero denominator in \"" + text + "\"");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.v_.get_str();
}

}  // namespace grassflow
