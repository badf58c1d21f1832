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

#include "multidom/exact.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "multidom/errors.h"

namespace multidom {

namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t v) { return Mask{1} << v; }

int count(Mask m) { return std::popcount(m); }

void check_instance(const Graph& g, Mode mode, std::size_t k,
                    std::size_t max_n) {
  const std::size_t cap = std::min(max_n, kHardExactCap);
  if (g.order() == 0) throw InvalidGraph("exact solve on an empty graph");
  if (g.order() > cap) {
    throw InstanceTooLarge("graph has " + std::to_string(g.order()) +
                           " vertices, exact cap is " + std::to_string(cap));
  }
  if (k == 0) throw KOutOfRange("multiplicity k must be at least 1");
  if (mode == Mode::kDom && k != 1) throw KOutOfRange("DOM needs k = 1");
  if (mode == Mode::kKTuple && k > min_degree(g) + 1) {
    throw KOutOfRange("k-tuple domination needs k <= min degree + 1");
  }
}

VertexSet to_set(std::size_t n, Mask m) {
  VertexSet s(n);
  while (m != 0) {
    s.insert(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return s;
}

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, Mode mode, std::size_t k)
      : n_(g.order()), mode_(mode), k_(static_cast<int>(k)) {
    open_.resize(n_);
    closed_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex u : g.neighbors(v)) open_[v] |= bit(u);
      closed_[v] = open_[v] | bit(v);
    }
  }

  // Smallest feasible set, found by raising the target size from a valid
  // lower bound until the search succeeds.
  Mask solve(std::size_t lower_bound) {
    for (std::size_t target = lower_bound; target <= n_; ++target) {
      target_ = static_cast<int>(target);
      if (search(0, 0)) return witness_;
    }
    return all();  // unreachable: V is always feasible for valid k
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  Mask all() const { return n_ == 64 ? ~Mask{0} : bit(n_) - 1; }

  // Members of S counted towards v's requirement.
  int hits(std::size_t v, Mask s) const {
    return mode_ == Mode::kKDom ? count(open_[v] & s) : count(closed_[v] & s);
  }

  bool satisfied(std::size_t v, Mask s) const {
    if (mode_ == Mode::kKDom && (s & bit(v)) != 0) return true;
    return hits(v, s) >= k_;
  }

  bool search(Mask chosen, Mask excluded) {
    ++nodes_;
    const Mask free = all() & ~chosen & ~excluded;
    Mask unsatisfied = 0;
    int most_need = 0;
    long total_deficit = 0;
    int best_slack = std::numeric_limits<int>::max();
    int best_cands = 0;
    Mask branch_cands = 0;

    for (std::size_t v = 0; v < n_; ++v) {
      if (satisfied(v, chosen)) continue;
      unsatisfied |= bit(v);
      const int deficit = k_ - std::min(hits(v, chosen), k_);
      Mask cands = 0;
      int need = deficit;
      if (mode_ == Mode::kKDom) {
        cands = open_[v] & free;
        if ((excluded & bit(v)) == 0) {
          // v itself may still join and satisfy its own requirement.
          cands |= bit(v);
          need = 1;
        }
      } else {
        cands = closed_[v] & free;
      }
      const int c = count(cands);
      if (c < need) return false;
      most_need = std::max(most_need, need);
      total_deficit += deficit;
      const int slack = c - need;
      if (slack < best_slack || (slack == best_slack && c < best_cands)) {
        best_slack = slack;
        best_cands = c;
        branch_cands = cands;
      }
    }
    if (unsatisfied == 0) {
      witness_ = chosen;
      return true;
    }

    const int remaining = target_ - count(chosen);
    if (most_need > remaining) return false;

    // Each added vertex removes at most max_gain units of total deficit.
    int max_gain = 0;
    for (Mask f = free; f != 0; f &= f - 1) {
      const std::size_t c = static_cast<std::size_t>(std::countr_zero(f));
      int gain = 0;
      if (mode_ == Mode::kKDom) {
        gain = count(open_[c] & unsatisfied);
        if ((unsatisfied & bit(c)) != 0) gain += k_ - std::min(hits(c, chosen), k_);
      } else {
        gain = count(closed_[c] & unsatisfied);
      }
      max_gain = std::max(max_gain, gain);
    }
    if (max_gain == 0) return false;
    const long lower = (total_deficit + max_gain - 1) / max_gain;
    if (lower > remaining) return false;

    // Branch on which candidate is the first (by id) to join the solution.
    Mask skipped = 0;
    for (Mask c = branch_cands; c != 0; c &= c - 1) {
      const Mask pick = c & (~c + 1);
      if (search(chosen | pick, excluded | skipped)) return true;
      skipped |= pick;
    }
    return false;
  }

  std::size_t n_;
  Mode mode_;
  int k_;
  std::vector<Mask> open_;
  std::vector<Mask> closed_;
  int target_ = 0;
  Mask witness_ = 0;
  std::uint64_t nodes_ = 0;
};

std::size_t mode_lower_bound(const Graph& g, Mode mode, std::size_t k) {
  switch (mode) {
    case Mode::kDom: {
      const std::size_t reach = max_degree(g) + 1;
      return (g.order() + reach - 1) / reach;
    }
    case Mode::kKTuple:
      return k;
    case Mode::kKDom:
      return 1;
  }
  return 0;
}

}  // namespace

ExactResult exact_minimum(const Graph& g, Mode mode, std::size_t k,
                          std::size_t max_n) {
  const auto start = std::chrono::steady_clock::now();
  if (mode == Mode::kDom) k = 1;
  check_instance(g, mode, k, max_n);
  ExactResult out;
  out.mode = mode;
  out.k = k;
  if (mode == Mode::kKDom && k > max_degree(g)) {
    out.trivial = true;
    out.optimum = g.order();
    out.witness = VertexSet::full(g.order());
  } else {
    BranchAndBound bnb(g, mode, k);
    const Mask best = bnb.solve(mode_lower_bound(g, mode, k));
    out.witness = to_set(g.order(), best);
    out.optimum = static_cast<std::size_t>(count(best));
    out.nodes_explored = bnb.nodes();
  }
  out.time = std::chrono::steady_clock::now() - start;
  return out;
}

ExactResult naive_minimum(const Graph& g, Mode mode, std::size_t k,
                          std::size_t max_n) {
  const auto start = std::chrono::steady_clock::now();
  if (mode == Mode::kDom) k = 1;
  check_instance(g, mode, k, max_n);
  const std::size_t n = g.order();
  ExactResult out;
  out.mode = mode;
  out.k = k;
  for (std::size_t size = 0; size <= n; ++size) {
    // Gosper's hack walks the size-subsets in increasing numeric order.
    Mask subset = size == 0 ? 0 : bit(size) - 1;
    const Mask limit = bit(n);
    while (subset < limit) {
      ++out.nodes_explored;
      VertexSet candidate = to_set(n, subset);
      if (is_feasible(g, mode, k, candidate)) {
        out.optimum = size;
        out.witness = std::move(candidate);
        out.time = std::chrono::steady_clock::now() - start;
        return out;
      }
      if (subset == 0) break;
      const Mask low = subset & (~subset + 1);
      const Mask ripple = subset + low;
      subset = (((ripple ^ subset) >> 2) / low) | ripple;
    }
  }
  throw TraceMismatch("no feasible subset found");  // V is always feasible
}

DominationChain domination_chain(const Graph& g, std::size_t k_max,
                                 std::size_t max_n) {
  DominationChain chain;
  chain.gamma = exact_minimum(g, Mode::kDom, 1, max_n).optimum;
  const std::size_t tuple_max = std::min(k_max, min_degree(g) + 1);
  for (std::size_t k = 1; k <= k_max; ++k) {
    chain.kdom.push_back(exact_minimum(g, Mode::kKDom, k, max_n).optimum);
    if (k <= tuple_max) {
      chain.ktuple.push_back(exact_minimum(g, Mode::kKTuple, k, max_n).optimum);
    }
  }
  bool ok = true;
  if (!chain.kdom.empty()) ok = ok && chain.kdom[0] == chain.gamma;
  if (!chain.ktuple.empty()) ok = ok && chain.ktuple[0] == chain.gamma;
  for (std::size_t i = 0; i + 1 < chain.kdom.size(); ++i) {
    ok = ok && chain.kdom[i] <= chain.kdom[i + 1];
  }
  for (std::size_t i = 0; i + 1 < chain.ktuple.size(); ++i) {
    ok = ok && chain.ktuple[i] <= chain.ktuple[i + 1];
  }
  for (std::size_t i = 0; i < chain.ktuple.size(); ++i) {
    ok = ok && chain.kdom[i] <= chain.ktuple[i];
  }
  chain.holds = ok;
  return chain;
}

bool verify_monotonicity(const Graph& g, std::size_t k_max,
                         std::size_t max_n) {
  return domination_chain(g, k_max, max_n).holds;
}

}  // namespace multidom
