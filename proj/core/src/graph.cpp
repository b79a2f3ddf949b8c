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

#include "negsssp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "negsssp/errors.hpp"

namespace negsssp {

template <class W>
Graph<W>::Graph(std::size_t n, std::vector<Edge<W>> edges,
                const std::vector<char>* sorted_exclude)
    : n_(n), edges_(std::move(edges)) {
  if (n_ >= kNoVertex || edges_.size() >= kNoEdge) {
    throw GraphError("graph too large");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge<W>& e = edges_[i];
    if (e.src >= n_ || e.dst >= n_) {
      throw GraphError("edge " + std::to_string(i) + " (" +
                       std::to_string(e.src) + "," + std::to_string(e.dst) +
                       ") has an endpoint outside [0," + std::to_string(n_) +
                       ")");
    }
    if (WeightTraits<W>::is_inf(e.weight)) {
      throw GraphError("edge " + std::to_string(i) + " has infinite weight");
    }
    e.id = static_cast<EdgeId>(i);
  }
  if (sorted_exclude != nullptr && sorted_exclude->size() != edges_.size()) {
    throw GraphError("exclusion mask size mismatch");
  }

  auto fill = [&](Csr& c, auto key, auto keep) {
    c.offset.assign(n_ + 2, 0);
    for (const Edge<W>& e : edges_) {
      if (keep(e)) ++c.offset[key(e) + 2];
    }
    for (std::size_t v = 2; v < c.offset.size(); ++v) {
      c.offset[v] += c.offset[v - 1];
    }
    c.ids.resize(c.offset.back());
    for (const Edge<W>& e : edges_) {
      if (keep(e)) c.ids[c.offset[key(e) + 1]++] = e.id;
    }
    c.offset.pop_back();
  };
  auto src = [](const Edge<W>& e) { return e.src; };
  auto dst = [](const Edge<W>& e) { return e.dst; };
  auto all = [](const Edge<W>&) { return true; };
  auto nonneg = [&](const Edge<W>& e) {
    if (sorted_exclude != nullptr && (*sorted_exclude)[e.id]) return false;
    return !(e.weight < 0);
  };
  fill(out_, src, all);
  fill(in_, dst, all);
  fill(sorted_out_, src, nonneg);
  fill(sorted_in_, dst, nonneg);

  auto by_weight = [&](EdgeId a, EdgeId b) {
    const W& wa = edges_[a].weight;
    const W& wb = edges_[b].weight;
    if (wa < wb) return true;
    if (wb < wa) return false;
    return a < b;
  };
  for (Csr* c : {&sorted_out_, &sorted_in_}) {
    for (std::size_t v = 0; v < n_; ++v) {
      std::sort(c->ids.begin() + c->offset[v], c->ids.begin() + c->offset[v + 1],
                by_weight);
    }
  }
}

template <class W>
Graph<W> build_graph(std::size_t n, const std::vector<EdgeSpec<W>>& edges) {
  std::vector<Edge<W>> es;
  es.reserve(edges.size());
  for (const EdgeSpec<W>& e : edges) {
    es.push_back({e.src, e.dst, e.weight, 0});
  }
  return Graph<W>(n, std::move(es));
}

template <class W>
FrozenGraph<W>::FrozenGraph(std::size_t n, std::vector<Edge<W>> edges,
                            std::vector<char> frozen,
                            std::vector<W> cumulative_phi)
    : frozen_(std::move(frozen)), phi_(std::move(cumulative_phi)) {
  if (frozen_.size() != edges.size()) {
    throw PreconditionError("frozen mask size mismatch");
  }
  if (phi_.size() != n) throw PreconditionError("potential size mismatch");
  graph_ = Graph<W>(n, std::move(edges), &frozen_);
  is_negative_.assign(n, 0);
  for (const Edge<W>& e : graph_.edges()) {
    if (frozen_[e.id]) {
      ++num_frozen_;
      is_negative_[e.src] = 1;
    } else if (e.weight < 0) {
      throw PreconditionError("non-frozen edge " + std::to_string(e.id) +
                              " is negative");
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (is_negative_[v]) negative_.push_back(v);
  }
}

template <class W>
std::vector<EdgeId> FrozenGraph<W>::frozen_edges() const {
  std::vector<EdgeId> out;
  out.reserve(num_frozen_);
  for (EdgeId e = 0; e < frozen_.size(); ++e) {
    if (frozen_[e]) out.push_back(e);
  }
  return out;
}

template <class W>
FrozenGraph<W> freeze(const Graph<W>& g) {
  std::vector<char> frozen(g.num_edges(), 0);
  for (const Edge<W>& e : g.edges()) frozen[e.id] = e.weight < 0;
  return FrozenGraph<W>(g.num_vertices(), g.edges(), std::move(frozen),
                        std::vector<W>(g.num_vertices(), W(0)));
}

template <class W>
W potential_slack(const FrozenGraph<W>& fg, const std::vector<W>& phi) {
  if constexpr (WeightTraits<W>::kExact) {
    return W(0);
  } else {
    W big = max_abs_finite<W>(phi);
    for (const Edge<W>& e : fg.graph().edges()) {
      big = std::max(big, WeightTraits<W>::abs(e.weight));
    }
    return WeightTraits<W>::slack(big);
  }
}

template <class W>
FrozenGraph<W> apply_potential(const FrozenGraph<W>& fg,
                               const std::vector<W>& phi) {
  const std::size_t n = fg.num_vertices();
  if (phi.size() != n) throw PotentialError("potential size mismatch");
  for (const W& p : phi) {
    if (WeightTraits<W>::is_inf(p)) {
      throw PotentialError("potential has an infinite entry");
    }
  }
  const W slack = potential_slack(fg, phi);
  std::vector<Edge<W>> edges = fg.graph().edges();
  for (Edge<W>& e : edges) {
    e.weight = e.weight + phi[e.src] - phi[e.dst];
    if (!fg.is_frozen(e.id) && e.weight < 0) {
      if (e.weight < -slack) {
        throw PotentialError("edge " + std::to_string(e.id) +
                             " becomes negative under the potential");
      }
      e.weight = W(0);
    }
  }
  std::vector<W> total = fg.cumulative_phi();
  for (std::size_t v = 0; v < n; ++v) total[v] = total[v] + phi[v];
  return FrozenGraph<W>(n, std::move(edges), fg.frozen_mask(), std::move(total));
}

template <class W>
FrozenGraph<W> unfreeze(const FrozenGraph<W>& fg) {
  std::vector<char> frozen(fg.num_edges(), 0);
  for (const Edge<W>& e : fg.graph().edges()) frozen[e.id] = e.weight < 0;
  return FrozenGraph<W>(fg.num_vertices(), fg.graph().edges(),
                        std::move(frozen), fg.cumulative_phi());
}

template <class W>
bool is_valid_potential(const FrozenGraph<W>& fg, const std::vector<W>& phi) {
  if (phi.size() != fg.num_vertices()) return false;
  for (const Edge<W>& e : fg.graph().edges()) {
    if (fg.is_frozen(e.id)) continue;
    if (e.weight + phi[e.src] - phi[e.dst] < 0) return false;
  }
  return true;
}

template <class W>
W walk_weight(const Graph<W>& g, std::span<const EdgeId> edges) {
  W total(0);
  for (EdgeId e : edges) total += g.edge(e).weight;
  return total;
}

#define NEGSSSP_INSTANTIATE(W)                                               \
  template class Graph<W>;                                                   \
  template class FrozenGraph<W>;                                             \
  template Graph<W> build_graph(std::size_t, const std::vector<EdgeSpec<W>>&); \
  template FrozenGraph<W> freeze(const Graph<W>&);                           \
  template FrozenGraph<W> apply_potential(const FrozenGraph<W>&,             \
                                          const std::vector<W>&);            \
  template FrozenGraph<W> unfreeze(const FrozenGraph<W>&);                   \
  template bool is_valid_potential(const FrozenGraph<W>&,                    \
                                   const std::vector<W>&);                   \
  template W potential_slack(const FrozenGraph<W>&, const std::vector<W>&);  \
  template W walk_weight(const Graph<W>&, std::span<const EdgeId>);

NEGSSSP_INSTANTIATE(double)
NEGSSSP_INSTANTIATE(Rational)

}  // namespace negsssp
