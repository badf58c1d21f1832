// Copyright 2026 The multidom Authors
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

#include "multidom/rational.h"

#include <cmath>

#include "multidom/errors.h"

namespace multidom {

Rational make_rational(unsigned long num, unsigned long den) {
  if (den == 0) throw PreconditionError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

Rational harmonic(std::size_t x) {
  Rational sum = 0;
  for (std::size_t i = 1; i <= x; ++i) {
    sum += Rational(1, static_cast<unsigned long>(i));
  }
  return sum;
}

std::vector<Rational> harmonic_table(std::size_t x_max) {
  std::vector<Rational> table(x_max + 1);
  table[0] = 0;
  for (std::size_t i = 1; i <= x_max; ++i) {
    table[i] = table[i - 1] + Rational(1, static_cast<unsigned long>(i));
  }
  return table;
}

bool check_harmonic_difference_bound(std::size_t x_max) {
  const std::vector<Rational> h = harmonic_table(x_max);
  // With H(x) = a/b, H(y) = c/d the inequality is
  //   (x - y) * b * d <= x * (a * d - c * b),
  // which avoids a gcd per pair.
  mpz_class lhs;
  mpz_class rhs;
  for (std::size_t x = 1; x <= x_max; ++x) {
    const mpz_class& a = h[x].get_num();
    const mpz_class& b = h[x].get_den();
    for (std::size_t y = 0; y <= x; ++y) {
      const mpz_class& c = h[y].get_num();
      const mpz_class& d = h[y].get_den();
      lhs = b * d;
      lhs *= static_cast<unsigned long>(x - y);
      rhs = a * d - c * b;
      rhs *= static_cast<unsigned long>(x);
      if (lhs > rhs) return false;
    }
  }
  return true;
}

bool check_harmonic_log_bound(std::size_t x_max, double tolerance) {
  long double sum = 0.0L;
  for (std::size_t x = 1; x <= x_max; ++x) {
    sum += 1.0L / static_cast<long double>(x);
    const long double bound =
        std::log(static_cast<long double>(x)) + 1.0L + tolerance;
    if (sum > bound) return false;
  }
  return true;
}

bool check_harmonic_inequalities(std::size_t x_max) {
  return check_harmonic_difference_bound(x_max) &&
         check_harmonic_log_bound(x_max);
}

}  // namespace multidom
