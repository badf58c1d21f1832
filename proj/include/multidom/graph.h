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

#ifndef MULTIDOM_GRAPH_H_
#define MULTIDOM_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "multidom/bitset_kernels.h"

namespace multidom {

// Vertices are dense ids 0..n-1.
using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Subset of {0, ..., universe-1}, packed one bit per vertex. Iteration is in
// ascending id order.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t size() const;
  bool empty() const;

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  bool is_subset_of(const VertexSet& other) const;
  // |this & other| and |this - other| without materialising the result.
  std::size_t intersection_size(const VertexSet& other) const;
  std::size_t difference_size(const VertexSet& other) const;

  std::vector<Vertex> to_vector() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      kernels::Word bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        fn(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const kernels::Word> words() const { return words_; }

 private:
  void check_same_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<kernels::Word> words_;
};

// Immutable simple undirected graph. Copies share the underlying storage.
class Graph {
 public:
  Graph() = default;

  // Duplicate pairs (in either orientation) collapse to one edge. Throws
  // InvalidGraph on n == 0, a self-loop, or an endpoint >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return data_ ? data_->adjacency.size() : 0; }
  std::size_t edge_count() const { return data_ ? data_->edge_count : 0; }

  // Ascending neighbour ids.
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  // Bitset rows for N(v) and N[v].
  const VertexSet& open_row(Vertex v) const;
  const VertexSet& closed_row(Vertex v) const;

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  // FNV-1a over n and the canonical edge list.
  std::uint64_t hash() const { return data_ ? data_->hash : 0; }

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct Data {
    std::size_t edge_count = 0;
    std::vector<std::vector<Vertex>> adjacency;
    std::vector<VertexSet> open_rows;
    std::vector<VertexSet> closed_rows;
    std::uint64_t hash = 0;
  };

  void check_vertex(Vertex v) const;

  std::shared_ptr<const Data> data_;
};

VertexSet closed_neighborhood(const Graph& g, Vertex v);
VertexSet open_neighborhood(const Graph& g, Vertex v);
// N[X]; N[empty] is empty.
VertexSet closed_neighborhood_of_set(const Graph& g, const VertexSet& x);

// Throw InvalidGraph on a graph with no vertices.
std::size_t max_degree(const Graph& g);
std::size_t min_degree(const Graph& g);

bool is_dominating(const Graph& g, const VertexSet& x);
// Every v outside X has at least k neighbours in X.
bool is_k_dominating(const Graph& g, std::size_t k, const VertexSet& x);
// Every v has |N[v] & X| >= k.
bool is_ktuple_dominating(const Graph& g, std::size_t k, const VertexSet& x);

}  // namespace multidom

#endif  // MULTIDOM_GRAPH_H_
