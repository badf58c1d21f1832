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

#include "multidom/graph.h"

#include <algorithm>
#include <string>

#include "multidom/errors.h"

namespace multidom {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

void check_k(std::size_t k) {
  if (k == 0) throw KOutOfRange("multiplicity k must be at least 1");
}

void check_members(const Graph& g, const VertexSet& x) {
  if (x.universe() != g.order()) {
    throw PreconditionError("vertex set universe " +
                            std::to_string(x.universe()) +
                            " does not match graph order " +
                            std::to_string(g.order()));
  }
}

}  // namespace

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~kernels::Word{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (kernels::Word{1} << (universe % 64)) - 1;
  }
  return s;
}

std::size_t VertexSet::size() const {
  return kernels::popcount(words_);
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](kernels::Word w) { return w == 0; });
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw VertexOutOfRange("vertex " + std::to_string(v) +
                           " outside universe of size " +
                           std::to_string(universe_));
  }
  words_[v >> 6] |= kernels::Word{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v >= universe_) return;
  words_[v >> 6] &= ~(kernels::Word{1} << (v & 63));
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw PreconditionError("vertex sets over different universes");
  }
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  kernels::or_into(words_, other.words_);
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  return difference_size(other) == 0;
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const {
  check_same_universe(other);
  return kernels::and_count(words_, other.words_);
}

std::size_t VertexSet::difference_size(const VertexSet& other) const {
  check_same_universe(other);
  return kernels::andnot_count(words_, other.words_);
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&out](Vertex v) { out.push_back(v); });
  return out;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw InvalidGraph("graph must have at least one vertex");
  auto data = std::make_shared<Data>();
  data->adjacency.resize(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidGraph("edge (" + std::to_string(u) + ", " +
                         std::to_string(v) + ") has an endpoint >= " +
                         std::to_string(n));
    }
    if (u == v) {
      throw InvalidGraph("self-loop at vertex " + std::to_string(u));
    }
    data->adjacency[u].push_back(v);
    data->adjacency[v].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& row : data->adjacency) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    degree_sum += row.size();
  }
  data->edge_count = degree_sum / 2;

  data->open_rows.reserve(n);
  data->closed_rows.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    VertexSet open(n, std::span<const Vertex>(data->adjacency[v]));
    VertexSet closed = open;
    closed.insert(v);
    data->open_rows.push_back(std::move(open));
    data->closed_rows.push_back(std::move(closed));
  }

  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (x >> (8 * byte)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : data->adjacency[u]) {
      if (u < v) {
        mix(u);
        mix(v);
      }
    }
  }
  data->hash = h;

  Graph g;
  g.data_ = std::move(data);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order()) {
    throw VertexOutOfRange("vertex " + std::to_string(v) +
                           " out of range for graph of order " +
                           std::to_string(order()));
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return data_->adjacency[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return data_->open_rows[u].contains(v);
}

const VertexSet& Graph::open_row(Vertex v) const {
  check_vertex(v);
  return data_->open_rows[v];
}

const VertexSet& Graph::closed_row(Vertex v) const {
  check_vertex(v);
  return data_->closed_rows[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : data_->adjacency[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.data_ == b.data_) return true;
  if (!a.data_ || !b.data_) return false;
  return a.data_->adjacency == b.data_->adjacency;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  return g.closed_row(v);
}

VertexSet open_neighborhood(const Graph& g, Vertex v) { return g.open_row(v); }

VertexSet closed_neighborhood_of_set(const Graph& g, const VertexSet& x) {
  check_members(g, x);
  VertexSet out(g.order());
  x.for_each([&](Vertex v) { out |= g.closed_row(v); });
  return out;
}

std::size_t max_degree(const Graph& g) {
  if (g.order() == 0) throw InvalidGraph("degree of an empty graph");
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) throw InvalidGraph("degree of an empty graph");
  std::size_t best = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

bool is_dominating(const Graph& g, const VertexSet& x) {
  return closed_neighborhood_of_set(g, x).size() == g.order();
}

bool is_k_dominating(const Graph& g, std::size_t k, const VertexSet& x) {
  check_k(k);
  check_members(g, x);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (x.contains(v)) continue;
    if (g.open_row(v).intersection_size(x) < k) return false;
  }
  return true;
}

bool is_ktuple_dominating(const Graph& g, std::size_t k, const VertexSet& x) {
  check_k(k);
  check_members(g, x);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.closed_row(v).intersection_size(x) < k) return false;
  }
  return true;
}

}  // namespace multidom
