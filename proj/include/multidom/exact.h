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

#ifndef MULTIDOM_EXACT_H_
#define MULTIDOM_EXACT_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "multidom/graph.h"
#include "multidom/greedy.h"

namespace multidom {

inline constexpr std::size_t kDefaultExactCap = 24;
inline constexpr std::size_t kDefaultNaiveCap = 10;
// Both oracles pack vertex sets into one 64-bit word.
inline constexpr std::size_t kHardExactCap = 63;

struct ExactResult {
  Mode mode = Mode::kDom;
  std::size_t k = 1;
  std::size_t optimum = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds time{0};
  // KDOM with k > max degree, answered as n without search.
  bool trivial = false;
};

// Minimum cardinality by iterative deepening on the target size with
// branch-and-bound. Throws InstanceTooLarge above max_n and KOutOfRange for
// an invalid multiplicity.
ExactResult exact_minimum(const Graph& g, Mode mode, std::size_t k,
                          std::size_t max_n = kDefaultExactCap);

// Reference oracle: tests all subsets in order of increasing cardinality.
ExactResult naive_minimum(const Graph& g, Mode mode, std::size_t k,
                          std::size_t max_n = kDefaultNaiveCap);

struct DominationChain {
  std::size_t gamma = 0;
  // kdom[k - 1] = gamma_k for k = 1..k_max.
  std::vector<std::size_t> kdom;
  // ktuple[k - 1] = gamma_xk for k = 1..min(k_max, min degree + 1).
  std::vector<std::size_t> ktuple;
  bool holds = false;
};

// Exact values of gamma, gamma_k and gamma_xk up to k_max, and whether
// gamma = gamma_1 = gamma_x1, gamma_k <= gamma_k', gamma_xk <= gamma_xk'
// (k <= k') and gamma_k <= gamma_xk all hold.
DominationChain domination_chain(const Graph& g, std::size_t k_max,
                                 std::size_t max_n = kDefaultExactCap);

bool verify_monotonicity(const Graph& g, std::size_t k_max,
                         std::size_t max_n = kDefaultExactCap);

}  // namespace multidom

#endif  // MULTIDOM_EXACT_H_
