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

#ifndef MULTIDOM_TESTS_TEST_GRAPHS_H_
#define MULTIDOM_TESTS_TEST_GRAPHS_H_

#include <random>
#include <vector>

#include "multidom/graph.h"
#include "multidom/harness.h"

namespace multidom::testing {

inline Graph path(std::size_t n) { return generate(FamilySpec::path(n)); }
inline Graph cycle(std::size_t n) { return generate(FamilySpec::cycle(n)); }
inline Graph complete(std::size_t n) { return generate(FamilySpec::complete(n)); }
// K_{1, n-1}
inline Graph star(std::size_t n) { return generate(FamilySpec::star(n)); }

// Random simple graph with n in [n_min, n_max] and p in [0.1, 0.8].
inline Graph random_graph(std::mt19937_64& rng, std::size_t n_min,
                          std::size_t n_max) {
  std::uniform_int_distribution<std::size_t> n_dist(n_min, n_max);
  std::uniform_real_distribution<double> p_dist(0.1, 0.8);
  const std::size_t n = n_dist(rng);
  const double p = p_dist(rng);
  return generate(FamilySpec::erdos_renyi(n, p, rng()));
}

inline VertexSet random_subset(std::mt19937_64& rng, std::size_t n,
                               double keep = 0.5) {
  std::bernoulli_distribution coin(keep);
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v) {
    if (coin(rng)) s.insert(v);
  }
  return s;
}

}  // namespace multidom::testing

#endif  // MULTIDOM_TESTS_TEST_GRAPHS_H_
