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

#include "multidom/greedy.h"

#include <algorithm>
#include <string>

#include "multidom/errors.h"

namespace multidom {

std::string_view mode_name(Mode mode) {
  switch (mode) {
    case Mode::kDom:
      return "DOM";
    case Mode::kKTuple:
      return "KTUPLE";
    case Mode::kKDom:
      return "KDOM";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view name) {
  if (name == "DOM" || name == "dom") return Mode::kDom;
  if (name == "KTUPLE" || name == "ktuple") return Mode::kKTuple;
  if (name == "KDOM" || name == "kdom") return Mode::kKDom;
  return std::nullopt;
}

VertexSet Solution::chosen_set() const {
  return VertexSet(graph.n, std::span<const Vertex>(chosen));
}

std::optional<std::size_t> max_multiplicity(const Graph& g, Mode mode) {
  switch (mode) {
    case Mode::kDom:
      return 1;
    case Mode::kKTuple:
      return min_degree(g) + 1;
    case Mode::kKDom:
      return std::nullopt;
  }
  return std::nullopt;
}

bool is_feasible(const Graph& g, Mode mode, std::size_t k,
                 const VertexSet& x) {
  switch (mode) {
    case Mode::kDom:
      return is_dominating(g, x);
    case Mode::kKTuple:
      return is_ktuple_dominating(g, k, x);
    case Mode::kKDom:
      return is_k_dominating(g, k, x);
  }
  return false;
}

GreedyState::GreedyState(const Graph& g, Mode mode, std::size_t k)
    : graph_(g),
      mode_(mode),
      k_(k),
      covered_(g.order()),
      selected_(g.order()),
      tokens_(g.order(), 0) {
  if (g.order() == 0) throw InvalidGraph("greedy on an empty graph");
  if (k == 0) throw KOutOfRange("multiplicity k must be at least 1");
  if (mode == Mode::kDom && k != 1) {
    throw KOutOfRange("DOM runs with k = 1 only");
  }
  if (mode == Mode::kKTuple && k > min_degree(g) + 1) {
    throw KOutOfRange("k-tuple domination needs k <= min degree + 1 = " +
                      std::to_string(min_degree(g) + 1) + ", got k = " +
                      std::to_string(k));
  }
}

std::size_t GreedyState::potential(Vertex v) const {
  if (mode_ == Mode::kKDom) {
    if (selected_.contains(v)) return 0;
    return (k_ - tokens_[v]) + graph_.open_row(v).difference_size(covered_);
  }
  return graph_.closed_row(v).difference_size(covered_);
}

std::optional<Vertex> GreedyState::best_candidate() const {
  std::optional<Vertex> best;
  std::size_t best_score = 0;
  for (Vertex v = 0; v < graph_.order(); ++v) {
    if (selected_.contains(v)) continue;
    const std::size_t s = potential(v);
    if (!best || s > best_score) {
      best = v;
      best_score = s;
    }
  }
  return best;
}

IterationRecord GreedyState::select(Vertex v) {
  if (v >= graph_.order()) {
    throw VertexOutOfRange("cannot select vertex " + std::to_string(v));
  }
  if (selected_.contains(v)) {
    throw PreconditionError("vertex " + std::to_string(v) +
                            " is already selected");
  }
  IterationRecord rec;
  rec.index = chosen_.size() + 1;
  rec.chosen = v;
  rec.score = potential(v);

  auto complete = [this, &rec](Vertex u) {
    covered_.insert(u);
    ++covered_count_;
    rec.newly_covered.push_back(u);
  };

  if (mode_ == Mode::kKDom) {
    // One token on each uncovered neighbour, then fill v itself up to k.
    const VertexSet receivers = graph_.open_row(v) - covered_;
    const std::size_t self_tokens = k_ - tokens_[v];
    selected_.insert(v);
    for (Vertex u : graph_.neighbors(v)) {
      if (receivers.contains(u)) {
        ++tokens_[u];
        if (tokens_[u] == k_) complete(u);
      }
    }
    // Self-tokens interleave with neighbour tokens in ascending id order.
    std::vector<TokenPlacement> placed;
    receivers.for_each([&placed](Vertex u) { placed.push_back({u, 1}); });
    if (self_tokens > 0) {
      tokens_[v] = k_;
      complete(v);
      placed.push_back({v, static_cast<std::uint32_t>(self_tokens)});
    }
    std::sort(placed.begin(), placed.end(),
              [](const TokenPlacement& a, const TokenPlacement& b) {
                return a.vertex < b.vertex;
              });
    rec.tokens = std::move(placed);
  } else {
    selected_.insert(v);
    for (Vertex u : graph_.closed_row(v).to_vector()) {
      ++tokens_[u];
      if (tokens_[u] == k_) complete(u);
    }
  }
  std::sort(rec.newly_covered.begin(), rec.newly_covered.end());
  rec.covered_after = covered_count_;
  chosen_.push_back(v);
  return rec;
}

namespace {

Solution run_greedy(const Graph& g, Mode mode, std::size_t k) {
  GreedyState state(g, mode, k);
  Solution sol;
  sol.mode = mode;
  sol.k = k;
  sol.graph = GraphFingerprint::of(g);
  while (!state.done()) {
    const std::optional<Vertex> next = state.best_candidate();
    // Unreachable for valid k: an uncovered vertex always has an unselected
    // vertex with positive score in its closed neighbourhood.
    if (!next) throw TraceMismatch("greedy ran out of candidates");
    sol.iterations.push_back(state.select(*next));
    sol.chosen.push_back(*next);
  }
  return sol;
}

}  // namespace

Solution greedy_dominating_set(const Graph& g) {
  return run_greedy(g, Mode::kDom, 1);
}

Solution greedy_ktuple_dominating_set(const Graph& g, std::size_t k) {
  return run_greedy(g, Mode::kKTuple, k);
}

Solution greedy_kdominating_set(const Graph& g, std::size_t k) {
  if (k == 0) throw KOutOfRange("multiplicity k must be at least 1");
  Solution sol = run_greedy(g, Mode::kKDom, k);
  // No vertex can collect k > max degree neighbours, so the result is all of
  // V. The selection order is still the greedy one, keeping the trace usable
  // for ledger checks.
  sol.trivial = k > max_degree(g);
  return sol;
}

Solution solve_greedy(const Graph& g, Mode mode, std::size_t k) {
  switch (mode) {
    case Mode::kDom:
      return greedy_dominating_set(g);
    case Mode::kKTuple:
      return greedy_ktuple_dominating_set(g, k);
    case Mode::kKDom:
      return greedy_kdominating_set(g, k);
  }
  throw PreconditionError("unknown mode");
}

bool replay_is_greedy(const Graph& g, const Solution& sol) {
  if (!(sol.graph == GraphFingerprint::of(g))) return false;
  if (sol.iterations.size() != sol.chosen.size()) return false;
  GreedyState state(g, sol.mode, sol.mode == Mode::kDom ? 1 : sol.k);
  for (std::size_t i = 0; i < sol.chosen.size(); ++i) {
    if (state.done()) return false;
    const Vertex v = sol.chosen[i];
    if (v >= g.order() || state.selected().contains(v)) return false;
    if (state.best_candidate() != v) return false;
    if (!(state.select(v) == sol.iterations[i])) return false;
  }
  return state.done() && is_feasible(g, sol.mode, sol.k, sol.chosen_set());
}

}  // namespace multidom
