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

#ifndef MULTIDOM_LEDGER_H_
#define MULTIDOM_LEDGER_H_

#include <cstddef>
#include <vector>

#include "multidom/graph.h"
#include "multidom/greedy.h"
#include "multidom/rational.h"

namespace multidom {

// Per-vertex cost decomposition of a greedy solution.
//
// Every iteration i spreads a unit of cost evenly over the score_i coverage
// units it produced (vertices for DOM/KTUPLE, tokens for KDOM), so each unit
// costs 1/score_i. For a vertex v:
//   arrival(v)      s_1(v) <= ... <= s_k(v), the iterations that delivered
//                   v's k coverage units (k = 1 for DOM);
//   contributors(v) the vertex selected in each of those iterations. Distinct
//                   for DOM/KTUPLE; for KDOM a repeat means v self-tokened;
//   cost(v, w)      for w in N[v]: 1/score of the iteration in which w
//                   contributed to v, or 1/score at s_k(v) if it did not.
class CostLedger {
 public:
  Mode mode() const { return mode_; }
  std::size_t k() const { return k_; }
  std::size_t solution_size() const { return chosen_.size(); }
  const Graph& graph() const { return graph_; }

  const std::vector<std::size_t>& arrival(Vertex v) const;
  const std::vector<Vertex>& contributors(Vertex v) const;

  // 1/score_i for 1 <= i <= |chosen|.
  const Rational& unit_cost(std::size_t iteration) const;
  std::size_t score(std::size_t iteration) const;

  // Throws PreconditionError unless w is in N[v].
  Rational cost(Vertex v, Vertex w) const;

  // Sum over j of c_v(contributor_j).
  Rational contributor_cost_sum(Vertex v) const;

  // r_0 >= r_1 >= ... >= r_m = 0 for vertex w. DOM: |N[w] - N[D_i]|.
  // KTUPLE: |N[w] - C_k[D_i]|, forced to 0 from the iteration that selects w.
  // KDOM: the potential coverage of w after iteration i.
  const std::vector<std::size_t>& r_sequence(Vertex w) const;

  friend CostLedger build_ledger(const Solution& sol, const Graph& g);

 private:
  Graph graph_;
  Mode mode_ = Mode::kDom;
  std::size_t k_ = 1;
  std::vector<Vertex> chosen_;
  std::vector<std::size_t> scores_;   // index 0 unused
  std::vector<Rational> unit_costs_;  // index 0 unused
  std::vector<std::vector<std::size_t>> arrival_;
  std::vector<std::vector<Vertex>> contributors_;
  std::vector<std::vector<std::size_t>> r_sequences_;
};

// Throws TraceMismatch when the solution does not belong to g or does not
// cover every vertex exactly k times.
CostLedger build_ledger(const Solution& sol, const Graph& g);

// Sum over all v of contributor_cost_sum(v). Equals |chosen| for a correct
// trace.
Rational check_sum_identity(const CostLedger& ledger);

// sum_j c_v(contributor_j) <= sum_{w in W} c_v(w). Throws PreconditionError
// unless W is a subset of N[v] with |W| >= k.
bool check_subset_cost_bound(const CostLedger& ledger, Vertex v,
                             const VertexSet& w);

struct NeighborhoodBound {
  // DOM/KTUPLE: sum over v in N[w] of c_v(w).
  // KDOM: sum over v in N(w) of c_v(w) plus w's own token costs.
  Rational lhs;
  // sum_{i=1..m} (r_{i-1} - r_i) / r_{i-1}
  Rational telescoped;
  // H(|N[w]|), or H(|N(w)| + k) for KDOM.
  Rational bound;

  bool holds() const { return lhs <= telescoped && telescoped <= bound; }
};

NeighborhoodBound check_neighborhood_bound(const CostLedger& ledger, Vertex w);

// Structural invariants: arrival ranges and order, contributor distinctness,
// r-sequence shape, KTUPLE cost monotonicity along arrival.
bool check_ledger_invariants(const CostLedger& ledger);

struct VertexBoundRow {
  Vertex w;
  Rational lhs;
  Rational bound;
};

struct LedgerCheckResult {
  Rational sum;
  bool sum_identity = false;
  bool invariants = false;
  std::size_t neighborhood_failures = 0;
  std::size_t subset_failures = 0;
  std::vector<VertexBoundRow> rows;

  bool passed() const {
    return sum_identity && invariants && neighborhood_failures == 0 &&
           subset_failures == 0;
  }
};

// Sum identity, invariants, every neighbourhood bound, and the subset bound
// for W = N[v] and W = {contributors of v} (when it has k members).
LedgerCheckResult run_ledger_checks(const CostLedger& ledger);

}  // namespace multidom

#endif  // MULTIDOM_LEDGER_H_
