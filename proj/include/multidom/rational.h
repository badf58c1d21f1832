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

#ifndef MULTIDOM_RATIONAL_H_
#define MULTIDOM_RATIONAL_H_

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace multidom {

// Exact rational with unbounded numerator and denominator, always canonical
// (reduced, positive denominator).
using Rational = mpq_class;

// num / den in lowest terms. The two-argument mpq_class constructor does
// not reduce, and GMP arithmetic assumes reduced operands.
Rational make_rational(unsigned long num, unsigned long den);

std::string to_string(const Rational& q);
double to_double(const Rational& q);

// H(x) = 1 + 1/2 + ... + 1/x, H(0) = 0.
Rational harmonic(std::size_t x);

// H(0..x_max) computed incrementally.
std::vector<Rational> harmonic_table(std::size_t x_max);

// (x - y) / x <= H(x) - H(y) for all 0 <= y <= x, 1 <= x <= x_max, exactly.
bool check_harmonic_difference_bound(std::size_t x_max);

// H(x) <= ln(x) + 1 + tolerance for 1 <= x <= x_max.
bool check_harmonic_log_bound(std::size_t x_max, double tolerance = 1e-12);

// Both of the above up to x_max.
bool check_harmonic_inequalities(std::size_t x_max);

}  // namespace multidom

#endif  // MULTIDOM_RATIONAL_H_
