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

#include <bit>
#include <cstdint>
#include <random>

#include "doctest.h"
#include "multidom/errors.h"
#include "multidom/exact.h"
#include "test_graphs.h"

namespace multidom {
namespace {

using testing::complete;
using testing::cycle;
using testing::star;

// Test-local enumeration straight from the definitions, sharing no code with
// either library oracle.
std::size_t brute_force_minimum(const Graph& g, Mode mode, std::size_t k) {
  const std::size_t n = g.order();
  std::size_t best = n;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      const bool in = ((s >> v) & 1U) != 0;
      std::size_t nbrs = 0;
      for (Vertex u : g.neighbors(v)) nbrs += (s >> u) & 1U;
      switch (mode) {
        case Mode::kDom:
          ok = in || nbrs >= 1;
          break;
        case Mode::kKTuple:
          ok = nbrs + (in ? 1 : 0) >= k;
          break;
        case Mode::kKDom:
          ok = in || nbrs >= k;
          break;
      }
    }
    if (ok) best = std::min<std::size_t>(best, std::popcount(s));
  }
  return best;
}

TEST_CASE("spot values from the reference enumeration") {
  // Frozen from brute_force_minimum / naive_minimum.
  CHECK(brute_force_minimum(cycle(6), Mode::kDom, 1) == 2);
  CHECK(brute_force_minimum(cycle(5), Mode::kKDom, 2) == 3);
  CHECK(brute_force_minimum(star(7), Mode::kKDom, 2) == 6);
  CHECK(brute_force_minimum(star(7), Mode::kKTuple, 2) == 7);
  CHECK(brute_force_minimum(complete(5), Mode::kKTuple, 3) == 3);

  CHECK(naive_minimum(cycle(6), Mode::kDom, 1).optimum == 2);
  CHECK(naive_minimum(cycle(5), Mode::kKDom, 2).optimum == 3);
  CHECK(naive_minimum(star(7), Mode::kKDom, 2).optimum == 6);
  CHECK(naive_minimum(star(7), Mode::kKTuple, 2).optimum == 7);
  CHECK(naive_minimum(complete(5), Mode::kKTuple, 3).optimum == 3);
}

TEST_CASE("branch-and-bound spot values") {
  CHECK(exact_minimum(cycle(6), Mode::kDom, 1).optimum == 2);
  CHECK(exact_minimum(complete(5), Mode::kKTuple, 3).optimum == 3);
  CHECK(exact_minimum(cycle(5), Mode::kKDom, 2).optimum == 3);
  CHECK(exact_minimum(star(7), Mode::kKDom, 2).optimum == 6);
  CHECK(exact_minimum(star(7), Mode::kKTuple, 2).optimum == 7);
}

TEST_CASE("no two vertices 2-dominate C5") {
  const Graph c5 = cycle(5);
  for (Vertex a = 0; a < 5; ++a) {
    for (Vertex b = a + 1; b < 5; ++b) {
      CHECK_FALSE(is_k_dominating(c5, 2, VertexSet(5, {a, b})));
    }
  }
}

TEST_CASE("k greater than max degree is answered without search") {
  const ExactResult r = exact_minimum(testing::path(3), Mode::kKDom, 3);
  CHECK(r.trivial);
  CHECK(r.optimum == 3);
  CHECK(r.nodes_explored == 0);
}

TEST_CASE("exact oracle errors") {
  CHECK_THROWS_AS(exact_minimum(testing::path(25), Mode::kDom, 1),
                  InstanceTooLarge);
  CHECK_NOTHROW(exact_minimum(testing::path(25), Mode::kDom, 1, 30));
  CHECK_THROWS_AS(exact_minimum(star(7), Mode::kKTuple, 3), KOutOfRange);
  CHECK_THROWS_AS(naive_minimum(testing::path(11), Mode::kDom, 1),
                  InstanceTooLarge);
  CHECK_THROWS_AS(exact_minimum(star(7), Mode::kKDom, 0), KOutOfRange);
}

TEST_CASE("both oracles agree with brute force and return valid witnesses") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 150; ++rep) {
    const Graph g = testing::random_graph(rng, 1, 8);
    const std::size_t tuple_max = min_degree(g) + 1;
    for (Mode mode : {Mode::kDom, Mode::kKTuple, Mode::kKDom}) {
      for (std::size_t k = 1; k <= 3; ++k) {
        if (mode == Mode::kDom && k > 1) continue;
        if (mode == Mode::kKTuple && k > tuple_max) continue;
        const ExactResult fast = exact_minimum(g, mode, k);
        const ExactResult slow = naive_minimum(g, mode, k);
        const std::size_t truth = brute_force_minimum(g, mode, k);
        CHECK(fast.optimum == truth);
        CHECK(slow.optimum == truth);
        CHECK(fast.witness.size() == fast.optimum);
        CHECK(is_feasible(g, mode, k, fast.witness));
        CHECK(is_feasible(g, mode, k, slow.witness));
      }
    }
  }
}

TEST_CASE("branch-and-bound handles the oracle cap comfortably") {
  // n = 24, the default cap, on a sparse and a dense graph.
  const Graph sparse = generate(FamilySpec::erdos_renyi(24, 0.15, 5));
  const Graph dense = generate(FamilySpec::erdos_renyi(24, 0.6, 5));
  for (const Graph* g : {&sparse, &dense}) {
    const ExactResult dom = exact_minimum(*g, Mode::kDom, 1);
    CHECK(is_dominating(*g, dom.witness));
    const ExactResult kdom = exact_minimum(*g, Mode::kKDom, 3);
    CHECK(is_k_dominating(*g, 3, kdom.witness));
    CHECK(kdom.optimum >= dom.optimum);
  }
}

TEST_CASE("exploration is deterministic") {
  const Graph g = generate(FamilySpec::erdos_renyi(16, 0.3, 3));
  const ExactResult a = exact_minimum(g, Mode::kKDom, 2);
  const ExactResult b = exact_minimum(g, Mode::kKDom, 2);
  CHECK(a.nodes_explored == b.nodes_explored);
  CHECK(a.witness == b.witness);
}

TEST_CASE("domination chain on the named examples") {
  const DominationChain s = domination_chain(star(7), 2);
  CHECK(s.gamma == 1);
  CHECK(s.kdom == std::vector<std::size_t>{1, 6});
  CHECK(s.ktuple == std::vector<std::size_t>{1, 7});
  CHECK(s.holds);

  const DominationChain k5 = domination_chain(complete(5), 4);
  CHECK(k5.kdom == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(k5.ktuple == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(k5.holds);

  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const Graph g = testing::random_graph(rng, 1, 10);
    const DominationChain one = domination_chain(g, 1);
    CHECK(one.kdom.front() == one.gamma);
    CHECK(one.ktuple.front() == one.gamma);
    CHECK(verify_monotonicity(g, 3));
  }
}

}  // namespace
}  // namespace multidom
