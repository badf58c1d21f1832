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

#ifndef MULTIDOM_GREEDY_H_
#define MULTIDOM_GREEDY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "multidom/graph.h"

namespace multidom {

enum class Mode { kDom, kKTuple, kKDom };

// "DOM", "KTUPLE", "KDOM".
std::string_view mode_name(Mode mode);
std::optional<Mode> parse_mode(std::string_view name);

struct TokenPlacement {
  Vertex vertex;
  std::uint32_t count;

  friend bool operator==(const TokenPlacement&, const TokenPlacement&) = default;
};

struct IterationRecord {
  std::size_t index = 0;  // 1-based
  Vertex chosen = 0;
  // The maximised quantity at selection time: |N[v] - covered| for DOM and
  // KTUPLE, deficiency plus uncovered open neighbourhood for KDOM.
  std::size_t score = 0;
  // Vertices whose coverage completed in this iteration, ascending.
  std::vector<Vertex> newly_covered;
  // KDOM only: tokens placed this iteration (self-tokens included), ascending
  // by vertex. Their counts sum to score.
  std::vector<TokenPlacement> tokens;
  std::size_t covered_after = 0;

  friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

struct GraphFingerprint {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t hash = 0;

  static GraphFingerprint of(const Graph& g) {
    return {g.order(), g.edge_count(), g.hash()};
  }
  friend bool operator==(const GraphFingerprint&, const GraphFingerprint&) = default;
};

struct Solution {
  Mode mode = Mode::kDom;
  std::size_t k = 1;
  // KDOM with k > max degree: the answer is all of V.
  bool trivial = false;
  std::vector<Vertex> chosen;
  std::vector<IterationRecord> iterations;
  GraphFingerprint graph;

  VertexSet chosen_set() const;

  friend bool operator==(const Solution&, const Solution&) = default;
};

// Incremental state of one greedy run. Exposed so traces can be replayed and
// per-step scores inspected for vertices the solver did not pick.
class GreedyState {
 public:
  // Validates k for the mode (KTUPLE needs 1 <= k <= min degree + 1).
  GreedyState(const Graph& g, Mode mode, std::size_t k);

  Mode mode() const { return mode_; }
  std::size_t k() const { return k_; }
  std::size_t iteration() const { return chosen_.size(); }
  bool done() const { return covered_count_ == graph_.order(); }

  const VertexSet& covered() const { return covered_; }
  const VertexSet& selected() const { return selected_; }
  bool is_covered(Vertex v) const { return covered_.contains(v); }

  // DOM/KTUPLE: |N[v] - covered|, defined for selected vertices too.
  // KDOM: the potential coverage, zero once v is selected.
  std::size_t potential(Vertex v) const;

  // KDOM tokens currently on v (0..k).
  std::size_t tokens_on(Vertex v) const { return tokens_[v]; }

  // Unselected vertex with the largest potential, smallest id on ties.
  std::optional<Vertex> best_candidate() const;

  // Adds v to the solution and returns the iteration record.
  IterationRecord select(Vertex v);

 private:
  Graph graph_;
  Mode mode_;
  std::size_t k_;
  VertexSet covered_;
  VertexSet selected_;
  std::size_t covered_count_ = 0;
  // DOM/KTUPLE: |N[v] & selected|. KDOM: tokens on v.
  std::vector<std::size_t> tokens_;
  std::vector<Vertex> chosen_;
};

Solution greedy_dominating_set(const Graph& g);
// Throws KOutOfRange unless 1 <= k <= min_degree(g) + 1.
Solution greedy_ktuple_dominating_set(const Graph& g, std::size_t k);
// For k > max_degree(g) the result is all of V with trivial set.
Solution greedy_kdominating_set(const Graph& g, std::size_t k);

Solution solve_greedy(const Graph& g, Mode mode, std::size_t k);

// Replays the chosen sequence: every record must match the replayed one and
// every choice must have the maximum score among unselected vertices, with
// the smallest id among ties.
bool replay_is_greedy(const Graph& g, const Solution& sol);

// Matching validator from graph-core for the solution's mode.
bool is_feasible(const Graph& g, Mode mode, std::size_t k, const VertexSet& x);

// Largest k the mode admits on g (KTUPLE: min degree + 1), or nullopt when
// unbounded.
std::optional<std::size_t> max_multiplicity(const Graph& g, Mode mode);

}  // namespace multidom

#endif  // MULTIDOM_GREEDY_H_
