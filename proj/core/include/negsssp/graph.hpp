// Copyright 2026 The negsssp Authors
//
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

#ifndef NEGSSSP_GRAPH_HPP_
#define NEGSSSP_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <variant>
#include <vector>

#include "negsssp/weight.hpp"

namespace negsssp {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

// Virtual vertex with a zero-weight edge to every vertex. Never stored.
struct SuperSource {
  friend bool operator==(SuperSource, SuperSource) { return true; }
};
using Source = std::variant<VertexId, SuperSource>;

template <class W>
struct EdgeSpec {
  VertexId src;
  VertexId dst;
  W weight;
};

template <class W>
struct Edge {
  VertexId src;
  VertexId dst;
  W weight;
  EdgeId id;
};

// A closed walk c0 -> c1 -> ... -> c0. edges[i] goes from vertices[i] to
// vertices[(i + 1) % size].
struct NegativeCycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

// Immutable directed multigraph with CSR adjacency.
//
// Edge ids equal positions in edges(). Out/in lists are in id order. The
// sorted lists hold the edges with weight >= 0 that are not excluded, ordered
// by (weight, id).
template <class W>
class Graph {
 public:
  Graph() = default;
  // Throws GraphError if an endpoint is out of range. `sorted_exclude`, if
  // non-null, is a per-edge mask of edges to keep out of the sorted lists.
  Graph(std::size_t n, std::vector<Edge<W>> edges,
        const std::vector<char>* sorted_exclude = nullptr);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge<W>>& edges() const { return edges_; }
  const Edge<W>& edge(EdgeId id) const { return edges_[id]; }

  std::span<const EdgeId> out_edges(VertexId u) const {
    return slice(out_, u);
  }
  std::span<const EdgeId> in_edges(VertexId v) const { return slice(in_, v); }
  std::span<const EdgeId> sorted_out_nonneg(VertexId u) const {
    return slice(sorted_out_, u);
  }
  std::span<const EdgeId> sorted_in_nonneg(VertexId v) const {
    return slice(sorted_in_, v);
  }

 private:
  struct Csr {
    std::vector<std::uint32_t> offset;
    std::vector<EdgeId> ids;
  };
  static std::span<const EdgeId> slice(const Csr& c, VertexId v) {
    return {c.ids.data() + c.offset[v], c.ids.data() + c.offset[v + 1]};
  }

  std::size_t n_ = 0;
  std::vector<Edge<W>> edges_;
  Csr out_, in_, sorted_out_, sorted_in_;
};

template <class W>
Graph<W> build_graph(std::size_t n, const std::vector<EdgeSpec<W>>& edges);

// A graph with a designated frozen edge set F and the potential accumulated
// since the original input. Hops are counted over F.
template <class W>
class FrozenGraph {
 public:
  FrozenGraph() = default;
  // Throws PreconditionError if a non-frozen edge is negative or if the mask
  // or potential have the wrong size.
  FrozenGraph(std::size_t n, std::vector<Edge<W>> edges,
              std::vector<char> frozen, std::vector<W> cumulative_phi);

  const Graph<W>& graph() const { return graph_; }
  std::size_t num_vertices() const { return graph_.num_vertices(); }
  std::size_t num_edges() const { return graph_.num_edges(); }

  bool is_frozen(EdgeId e) const { return frozen_[e] != 0; }
  const std::vector<char>& frozen_mask() const { return frozen_; }
  std::vector<EdgeId> frozen_edges() const;
  std::size_t num_frozen() const { return num_frozen_; }

  const std::vector<W>& cumulative_phi() const { return phi_; }

  // Vertices with at least one frozen out-edge, ascending.
  const std::vector<VertexId>& negative_vertices() const { return negative_; }
  bool is_negative_vertex(VertexId v) const { return is_negative_[v] != 0; }
  std::size_t k() const { return negative_.size(); }

 private:
  Graph<W> graph_;
  std::vector<char> frozen_;
  std::size_t num_frozen_ = 0;
  std::vector<W> phi_;
  std::vector<VertexId> negative_;
  std::vector<char> is_negative_;
};

// F = edges with weight < 0, zero potential.
template <class W>
FrozenGraph<W> freeze(const Graph<W>& g);

// Reweights every edge by w + phi(src) - phi(dst). Throws PotentialError if a
// non-frozen edge would become negative. In float mode values within the
// documented slack below zero are clamped to zero.
template <class W>
FrozenGraph<W> apply_potential(const FrozenGraph<W>& fg,
                               const std::vector<W>& phi);

// F = edges whose current weight is < 0.
template <class W>
FrozenGraph<W> unfreeze(const FrozenGraph<W>& fg);

// True if no non-frozen edge of fg becomes negative under phi (exact; no
// slack).
template <class W>
bool is_valid_potential(const FrozenGraph<W>& fg, const std::vector<W>& phi);

// Slack used by apply_potential for the given potential.
template <class W>
W potential_slack(const FrozenGraph<W>& fg, const std::vector<W>& phi);

// Sum of edge weights; +inf never appears in stored edges.
template <class W>
W walk_weight(const Graph<W>& g, std::span<const EdgeId> edges);

}  // namespace negsssp

#endif  // NEGSSSP_GRAPH_HPP_
