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

#include <cmath>
#include <random>

#include "doctest.h"
#include "multidom/errors.h"
#include "multidom/ledger.h"
#include "multidom/rational.h"
#include "test_graphs.h"

namespace multidom {
namespace {

using testing::path;
using testing::star;

Rational q(unsigned long num, unsigned long den) {
  return make_rational(num, den);
}

// DOM costs straight from the trace: every vertex newly covered in an
// iteration pays one over that iteration's score.
std::vector<Rational> dom_costs(const Graph& g, const Solution& sol) {
  std::vector<Rational> out(g.order(), Rational(0));
  for (const IterationRecord& it : sol.iterations) {
    for (Vertex v : it.newly_covered) {
      out[v] = Rational(1, static_cast<unsigned long>(it.score));
    }
  }
  return out;
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == 0);
  CHECK(harmonic(1) == 1);
  CHECK(harmonic(4) == q(25, 12));
  CHECK(harmonic(7) == q(363, 140));
  CHECK(harmonic(8) == q(761, 280));
  const auto table = harmonic_table(30);
  for (std::size_t x = 0; x <= 30; ++x) CHECK(table[x] == harmonic(x));

  // x = 10, y = 7: 3/10 <= H(10) - H(7) = 1/8 + 1/9 + 1/10.
  const Rational diff = harmonic(10) - harmonic(7);
  CHECK(diff == q(1, 8) + q(1, 9) + q(1, 10));
  CHECK(q(3, 10) <= diff);

  CHECK(check_harmonic_inequalities(1000));
  CHECK(to_string(q(6, 4)) == "3/2");
  CHECK(to_double(q(1, 4)) == doctest::Approx(0.25));
}

TEST_CASE("harmonic log bound against a float recomputation") {
  double h = 0.0;
  for (std::size_t x = 1; x <= 20000; ++x) {
    h += 1.0 / static_cast<double>(x);
    CHECK(h <= std::log(static_cast<double>(x)) + 1.0 + 1e-9);
  }
  CHECK(check_harmonic_log_bound(10000));
}

TEST_CASE("rationals are kept in lowest terms") {
  const Rational half = q(6, 12);
  CHECK(half.get_num() == 1);
  CHECK(half.get_den() == 2);
  CHECK(half == q(1, 2));
  CHECK(q(4, 4) == 1);
  CHECK_THROWS_AS(q(1, 0), PreconditionError);
}

TEST_CASE("P3 DOM ledger") {
  const Graph g = path(3);
  const CostLedger ledger = build_ledger(greedy_dominating_set(g), g);
  CHECK(ledger.solution_size() == 1);
  for (Vertex v = 0; v < 3; ++v) {
    CHECK(ledger.cost(v, 1) == q(1, 3));
    CHECK(ledger.contributor_cost_sum(v) == q(1, 3));
    CHECK(ledger.arrival(v) == std::vector<std::size_t>{1});
  }
  CHECK(check_sum_identity(ledger) == 1);
  const NeighborhoodBound nb = check_neighborhood_bound(ledger, 1);
  CHECK(nb.lhs == 1);
  CHECK(nb.bound == q(11, 6));
  CHECK(nb.holds());
  CHECK_THROWS_AS(ledger.cost(0, 2), PreconditionError);
}

TEST_CASE("K_{1,6} KTUPLE k = 2 ledger") {
  const Graph g = star(7);
  const CostLedger ledger = build_ledger(greedy_ktuple_dominating_set(g, 2), g);
  CHECK(ledger.cost(0, 0) == q(1, 7));
  CHECK(ledger.score(1) == 7);
  CHECK(ledger.unit_cost(2) == q(1, 2));
  CHECK(check_sum_identity(ledger) == 7);
  const NeighborhoodBound nb = check_neighborhood_bound(ledger, 0);
  CHECK(nb.lhs == 1);
  CHECK(nb.bound == q(363, 140));
  CHECK(nb.holds());
  CHECK(run_ledger_checks(ledger).passed());
}

TEST_CASE("K_{1,6} KDOM k = 2 ledger") {
  const Graph g = star(7);
  const CostLedger ledger = build_ledger(greedy_kdominating_set(g, 2), g);
  CHECK(ledger.unit_cost(1) == q(1, 8));
  CHECK(check_sum_identity(ledger) == 7);
  const NeighborhoodBound nb = check_neighborhood_bound(ledger, 0);
  CHECK(nb.lhs == 1);
  CHECK(nb.bound == q(761, 280));
  CHECK(nb.holds());
  // The centre's two tokens both come from itself.
  CHECK(ledger.contributors(0) == std::vector<Vertex>{0, 0});
  CHECK(run_ledger_checks(ledger).passed());
}

TEST_CASE("subset bound: equality on the contributors, strict examples") {
  const Graph g = star(7);
  const CostLedger ledger = build_ledger(greedy_ktuple_dominating_set(g, 2), g);
  // Leaf 3: contributors are the centre and itself.
  const auto& who = ledger.contributors(3);
  REQUIRE(who.size() == 2);
  const VertexSet d3(7, std::span<const Vertex>(who));
  Rational sum = 0;
  d3.for_each([&](Vertex x) { sum += ledger.cost(3, x); });
  CHECK(sum == ledger.contributor_cost_sum(3));
  CHECK(check_subset_cost_bound(ledger, 3, d3));
  CHECK(check_subset_cost_bound(ledger, 0, g.closed_row(0)));

  CHECK_THROWS_AS(check_subset_cost_bound(ledger, 3, VertexSet(7, {3})),
                  PreconditionError);
  CHECK_THROWS_AS(check_subset_cost_bound(ledger, 3, VertexSet(7, {3, 4})),
                  PreconditionError);
}

TEST_CASE("trace mismatches") {
  const Graph g = star(7);
  const Solution sol = greedy_dominating_set(g);
  CHECK_THROWS_AS(build_ledger(sol, testing::complete(7)), TraceMismatch);

  Solution zero = sol;
  zero.iterations.front().score = 0;
  CHECK_THROWS_AS(build_ledger(zero, g), TraceMismatch);

  Solution short_trace = greedy_ktuple_dominating_set(g, 2);
  short_trace.chosen.pop_back();
  short_trace.iterations.pop_back();
  CHECK_THROWS_AS(build_ledger(short_trace, g), TraceMismatch);

  Solution stray = greedy_kdominating_set(g, 2);
  stray.iterations.back().tokens.push_back({stray.chosen.front(), 1});
  if (!g.closed_row(stray.chosen.back()).contains(stray.chosen.front())) {
    CHECK_THROWS_AS(build_ledger(stray, g), TraceMismatch);
  }
}

TEST_CASE("DOM ledger matches an independent cost computation") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 60; ++rep) {
    const Graph g = testing::random_graph(rng, 1, 20);
    const Solution sol = greedy_dominating_set(g);
    const CostLedger ledger = build_ledger(sol, g);
    const auto expect = dom_costs(g, sol);
    for (Vertex v = 0; v < g.order(); ++v) {
      CHECK(ledger.contributor_cost_sum(v) == expect[v]);
    }
    for (Vertex w = 0; w < g.order(); ++w) {
      // lhs = sum_i (r_{i-1} - r_i) / score_i, and telescoped <= H(r_0).
      const auto& r = ledger.r_sequence(w);
      Rational by_r = 0;
      Rational tele = 0;
      for (std::size_t i = 1; i < r.size(); ++i) {
        by_r += q(r[i - 1] - r[i], ledger.score(i));
        tele += q(r[i - 1] - r[i], r[i - 1]);
      }
      const NeighborhoodBound nb = check_neighborhood_bound(ledger, w);
      CHECK(nb.lhs == by_r);
      CHECK(nb.telescoped == tele);
      CHECK(tele <= harmonic(r.front()));
      CHECK(r.front() == g.degree(w) + 1);
    }
  }
}

TEST_CASE("ledger checks hold on random graphs in every mode") {
  std::mt19937_64 rng(77);
  for (int rep = 0; rep < 80; ++rep) {
    const Graph g = testing::random_graph(rng, 1, 18);
    for (Mode mode : {Mode::kDom, Mode::kKTuple, Mode::kKDom}) {
      for (std::size_t k = 1; k <= 3; ++k) {
        if (mode == Mode::kDom && k > 1) continue;
        if (mode == Mode::kKTuple && k > min_degree(g) + 1) continue;
        const Solution sol = solve_greedy(g, mode, k);
        const CostLedger ledger = build_ledger(sol, g);
        const LedgerCheckResult res = run_ledger_checks(ledger);
        CHECK(res.sum == static_cast<long>(sol.chosen.size()));
        CHECK(res.passed());
        CHECK(res.rows.size() == g.order());
      }
    }
  }
}

TEST_CASE("subset bound exhaustively over small neighbourhoods") {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 40; ++rep) {
    const Graph g = testing::random_graph(rng, 2, 12);
    for (Mode mode : {Mode::kDom, Mode::kKTuple, Mode::kKDom}) {
      const std::size_t k = mode == Mode::kDom
                                ? 1
                                : std::min<std::size_t>(2, min_degree(g) + 1);
      const CostLedger ledger = build_ledger(solve_greedy(g, mode, k), g);
      for (Vertex v = 0; v < g.order(); ++v) {
        const auto members = g.closed_row(v).to_vector();
        const std::size_t m = members.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
          VertexSet w(g.order());
          for (std::size_t j = 0; j < m; ++j) {
            if ((mask >> j) & 1U) w.insert(members[j]);
          }
          if (w.size() < ledger.k()) continue;
          CHECK(check_subset_cost_bound(ledger, v, w));
        }
      }
    }
  }
}

}  // namespace
}  // namespace multidom
