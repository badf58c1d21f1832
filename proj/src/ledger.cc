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

#include "multidom/ledger.h"

#include <algorithm>
#include <string>

#include "multidom/errors.h"

namespace multidom {

const std::vector<std::size_t>& CostLedger::arrival(Vertex v) const {
  return arrival_.at(v);
}

const std::vector<Vertex>& CostLedger::contributors(Vertex v) const {
  return contributors_.at(v);
}

const Rational& CostLedger::unit_cost(std::size_t iteration) const {
  if (iteration == 0 || iteration >= unit_costs_.size()) {
    throw PreconditionError("iteration " + std::to_string(iteration) +
                            " out of range");
  }
  return unit_costs_[iteration];
}

std::size_t CostLedger::score(std::size_t iteration) const {
  if (iteration == 0 || iteration >= scores_.size()) {
    throw PreconditionError("iteration " + std::to_string(iteration) +
                            " out of range");
  }
  return scores_[iteration];
}

Rational CostLedger::cost(Vertex v, Vertex w) const {
  if (!graph_.closed_row(v).contains(w)) {
    throw PreconditionError("cost of " + std::to_string(v) +
                            " with respect to " + std::to_string(w) +
                            ": not in its closed neighbourhood");
  }
  const auto& arr = arrival_[v];
  const auto& who = contributors_[v];
  for (std::size_t j = 0; j < who.size(); ++j) {
    if (who[j] == w) return unit_costs_[arr[j]];
  }
  return unit_costs_[arr.back()];
}

Rational CostLedger::contributor_cost_sum(Vertex v) const {
  Rational sum = 0;
  for (std::size_t s : arrival_.at(v)) sum += unit_costs_[s];
  return sum;
}

const std::vector<std::size_t>& CostLedger::r_sequence(Vertex w) const {
  return r_sequences_.at(w);
}

CostLedger build_ledger(const Solution& sol, const Graph& g) {
  if (!(sol.graph == GraphFingerprint::of(g))) {
    throw TraceMismatch("solution fingerprint does not match the graph");
  }
  if (sol.iterations.size() != sol.chosen.size()) {
    throw TraceMismatch("iteration count differs from solution size");
  }
  const std::size_t n = g.order();
  const std::size_t k = sol.mode == Mode::kDom ? 1 : sol.k;

  CostLedger ledger;
  ledger.graph_ = g;
  ledger.mode_ = sol.mode;
  ledger.k_ = k;
  ledger.chosen_ = sol.chosen;
  ledger.scores_.assign(sol.chosen.size() + 1, 0);
  ledger.unit_costs_.assign(sol.chosen.size() + 1, Rational(0));
  ledger.arrival_.assign(n, {});
  ledger.contributors_.assign(n, {});

  for (std::size_t i = 1; i <= sol.chosen.size(); ++i) {
    const IterationRecord& rec = sol.iterations[i - 1];
    if (rec.index != i || rec.chosen != sol.chosen[i - 1]) {
      throw TraceMismatch("iteration " + std::to_string(i) +
                          " does not match the chosen sequence");
    }
    if (rec.chosen >= n) throw TraceMismatch("chosen vertex out of range");
    if (rec.score == 0) {
      throw TraceMismatch("iteration " + std::to_string(i) +
                          " has zero score");
    }
    ledger.scores_[i] = rec.score;
    ledger.unit_costs_[i] = Rational(1, static_cast<unsigned long>(rec.score));
    const Vertex d = rec.chosen;

    if (sol.mode == Mode::kKDom) {
      for (const TokenPlacement& t : rec.tokens) {
        if (t.vertex >= n || !g.closed_row(d).contains(t.vertex)) {
          throw TraceMismatch("token placed outside N[x_" +
                              std::to_string(i) + "]");
        }
        for (std::uint32_t c = 0; c < t.count; ++c) {
          ledger.arrival_[t.vertex].push_back(i);
          ledger.contributors_[t.vertex].push_back(d);
        }
      }
    } else {
      // d_i contributes to every v in N[d_i] still short of k selections.
      g.closed_row(d).for_each([&](Vertex v) {
        if (ledger.arrival_[v].size() < k) {
          ledger.arrival_[v].push_back(i);
          ledger.contributors_[v].push_back(d);
        }
      });
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (ledger.arrival_[v].size() != k) {
      throw TraceMismatch("vertex " + std::to_string(v) + " received " +
                          std::to_string(ledger.arrival_[v].size()) +
                          " coverage units, expected " + std::to_string(k));
    }
  }

  // r-sequences by replaying the selections.
  GreedyState state(g, sol.mode, k);
  ledger.r_sequences_.assign(n, {});
  std::vector<bool> finished(n, false);
  auto sample = [&]() {
    for (Vertex w = 0; w < n; ++w) {
      if (finished[w]) continue;
      std::size_t r = 0;
      if (sol.mode == Mode::kKTuple && state.selected().contains(w)) {
        r = 0;
      } else {
        r = state.potential(w);
      }
      ledger.r_sequences_[w].push_back(r);
      if (r == 0) finished[w] = true;
    }
  };
  sample();
  for (Vertex d : sol.chosen) {
    state.select(d);
    sample();
  }
  for (Vertex w = 0; w < n; ++w) {
    if (!finished[w]) {
      throw TraceMismatch("r-sequence of vertex " + std::to_string(w) +
                          " never reaches zero");
    }
  }
  return ledger;
}

Rational check_sum_identity(const CostLedger& ledger) {
  Rational total = 0;
  for (Vertex v = 0; v < ledger.graph().order(); ++v) {
    total += ledger.contributor_cost_sum(v);
  }
  return total;
}

bool check_subset_cost_bound(const CostLedger& ledger, Vertex v,
                             const VertexSet& w) {
  const VertexSet& closed = ledger.graph().closed_row(v);
  if (!w.is_subset_of(closed)) {
    throw PreconditionError("W must be a subset of N[" + std::to_string(v) +
                            "]");
  }
  if (w.size() < ledger.k()) {
    throw PreconditionError("W must have at least k members");
  }
  Rational rhs = 0;
  w.for_each([&](Vertex x) { rhs += ledger.cost(v, x); });
  return ledger.contributor_cost_sum(v) <= rhs;
}

NeighborhoodBound check_neighborhood_bound(const CostLedger& ledger,
                                           Vertex w) {
  const Graph& g = ledger.graph();
  NeighborhoodBound out;
  out.lhs = 0;
  if (ledger.mode() == Mode::kKDom) {
    for (Vertex v : g.neighbors(w)) out.lhs += ledger.cost(v, w);
    out.lhs += ledger.contributor_cost_sum(w);
    out.bound = harmonic(g.degree(w) + ledger.k());
  } else {
    g.closed_row(w).for_each([&](Vertex v) { out.lhs += ledger.cost(v, w); });
    out.bound = harmonic(g.degree(w) + 1);
  }
  out.telescoped = 0;
  const auto& r = ledger.r_sequence(w);
  for (std::size_t i = 1; i < r.size(); ++i) {
    out.telescoped += make_rational(r[i - 1] - r[i], r[i - 1]);
  }
  return out;
}

bool check_ledger_invariants(const CostLedger& ledger) {
  const Graph& g = ledger.graph();
  const std::size_t iterations = ledger.solution_size();
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& arr = ledger.arrival(v);
    const auto& who = ledger.contributors(v);
    if (arr.size() != ledger.k() || who.size() != arr.size()) return false;
    for (std::size_t j = 0; j < arr.size(); ++j) {
      if (arr[j] < 1 || arr[j] > iterations) return false;
      if (j > 0 && arr[j] < arr[j - 1]) return false;
      if (!g.closed_row(v).contains(who[j])) return false;
    }
    for (std::size_t a = 0; a < who.size(); ++a) {
      for (std::size_t b = a + 1; b < who.size(); ++b) {
        if (who[a] != who[b]) continue;
        // Only KDOM self-tokens may repeat a contributor.
        if (ledger.mode() != Mode::kKDom || who[a] != v) return false;
      }
    }
    if (ledger.mode() == Mode::kKTuple) {
      const Rational& last = ledger.unit_cost(arr.back());
      for (std::size_t s : arr) {
        if (ledger.unit_cost(s) > last) return false;
      }
    }
    const auto& r = ledger.r_sequence(v);
    if (r.empty() || r.back() != 0) return false;
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
      if (r[i] == 0 || r[i + 1] > r[i]) return false;
    }
  }
  return true;
}

LedgerCheckResult run_ledger_checks(const CostLedger& ledger) {
  LedgerCheckResult out;
  const Graph& g = ledger.graph();
  out.sum = check_sum_identity(ledger);
  out.sum_identity =
      out.sum == Rational(static_cast<unsigned long>(ledger.solution_size()));
  out.invariants = check_ledger_invariants(ledger);
  for (Vertex w = 0; w < g.order(); ++w) {
    NeighborhoodBound nb = check_neighborhood_bound(ledger, w);
    if (!nb.holds()) ++out.neighborhood_failures;
    out.rows.push_back({w, nb.lhs, nb.bound});

    if (g.closed_row(w).size() >= ledger.k() &&
        !check_subset_cost_bound(ledger, w, g.closed_row(w))) {
      ++out.subset_failures;
    }
    VertexSet own(g.order(), std::span<const Vertex>(ledger.contributors(w)));
    if (own.size() >= ledger.k() && !check_subset_cost_bound(ledger, w, own)) {
      ++out.subset_failures;
    }
  }
  return out;
}

}  // namespace multidom
