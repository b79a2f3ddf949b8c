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

#include "negsssp/hop_sssp.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <utility>

#include "negsssp/cycles.hpp"
#include "negsssp/errors.hpp"

namespace negsssp {
namespace {

template <class W>
struct HeapItem {
  W dist;
  VertexId v;
  friend bool operator>(const HeapItem& a, const HeapItem& b) {
    if (a.dist < b.dist) return false;
    if (b.dist < a.dist) return true;
    return a.v > b.v;
  }
};

template <class W>
using MinHeap =
    std::priority_queue<HeapItem<W>, std::vector<HeapItem<W>>, std::greater<>>;

template <class W>
bool is_inf(const W& w) {
  return WeightTraits<W>::is_inf(w);
}

// Generic lazy-deletion Dijkstra. `next(u, relax)` calls relax(v, w) for each
// admissible edge u -> v of weight w.
template <class W, class Next>
void run_dijkstra(std::vector<W>& dist, Next&& next) {
  const std::size_t n = dist.size();
  std::vector<char> done(n, 0);
  MinHeap<W> heap;
  for (VertexId v = 0; v < n; ++v) {
    if (!is_inf(dist[v])) heap.push({dist[v], v});
  }
  while (!heap.empty()) {
    HeapItem<W> top = heap.top();
    heap.pop();
    if (done[top.v] || dist[top.v] < top.dist) continue;
    done[top.v] = 1;
    next(top.v, [&](VertexId v, const W& w) {
      if (done[v]) return;
      W cand = top.dist + w;
      if (cand < dist[v]) {
        dist[v] = cand;
        heap.push({cand, v});
      }
    });
  }
}

// One relaxation of every frozen edge from a snapshot of the labels. Returns
// true if some label dropped by more than `tol`.
template <class W>
bool frozen_sweep(const FrozenGraph<W>& fg, std::vector<W>& labels,
                  const W& tol) {
  const std::vector<W> before = labels;
  bool improved = false;
  for (const Edge<W>& e : fg.graph().edges()) {
    if (!fg.is_frozen(e.id) || is_inf(before[e.src])) continue;
    W cand = before[e.src] + e.weight;
    if (cand < labels[e.dst]) {
      if (cand < labels[e.dst] - tol) improved = true;
      labels[e.dst] = cand;
    }
  }
  return improved;
}

template <class W>
W label_tolerance(const FrozenGraph<W>& fg, const std::vector<W>& labels) {
  if constexpr (WeightTraits<W>::kExact) {
    return W(0);
  } else {
    W big = max_abs_finite<W>(labels);
    for (const Edge<W>& e : fg.graph().edges()) {
      big = std::max(big, WeightTraits<W>::abs(e.weight));
    }
    return WeightTraits<W>::slack(big) * static_cast<W>(fg.num_vertices() + 1);
  }
}

}  // namespace

template <class W>
std::vector<W> source_labels(std::size_t n, const Source& source) {
  if (std::holds_alternative<SuperSource>(source)) {
    return std::vector<W>(n, W(0));
  }
  VertexId s = std::get<VertexId>(source);
  if (s >= n) throw PreconditionError("source out of range");
  std::vector<W> labels(n, WeightTraits<W>::inf());
  labels[s] = W(0);
  return labels;
}

template <class W>
std::vector<W> dijkstra(const Graph<W>& g, VertexId source,
                        const EdgeFilter& filter) {
  if (source >= g.num_vertices()) {
    throw PreconditionError("source out of range");
  }
  for (const Edge<W>& e : g.edges()) {
    if (e.weight < 0 && e.src != source && filter(e.id)) {
      throw PreconditionError("negative edge " + std::to_string(e.id) +
                              " does not leave the source");
    }
  }
  std::vector<W> dist(g.num_vertices(), WeightTraits<W>::inf());
  dist[source] = W(0);
  run_dijkstra(dist, [&](VertexId u, auto&& relax) {
    for (EdgeId id : g.out_edges(u)) {
      if (!filter(id)) continue;
      const Edge<W>& e = g.edge(id);
      relax(e.dst, e.weight);
    }
  });
  return dist;
}

template <class W>
void dijkstra_from_labels(const FrozenGraph<W>& fg, std::vector<W>& labels) {
  const Graph<W>& g = fg.graph();
  run_dijkstra(labels, [&](VertexId u, auto&& relax) {
    for (EdgeId id : g.sorted_out_nonneg(u)) {
      const Edge<W>& e = g.edge(id);
      relax(e.dst, e.weight);
    }
  });
}

template <class W>
std::vector<W> hop_sssp_seeded(const FrozenGraph<W>& fg, std::vector<W> labels,
                               std::size_t h) {
  if (labels.size() != fg.num_vertices()) {
    throw PreconditionError("label vector size mismatch");
  }
  dijkstra_from_labels(fg, labels);
  for (std::size_t round = 0; round < h; ++round) {
    if (fg.num_frozen() == 0) break;
    std::vector<W> before = labels;
    frozen_sweep(fg, labels, W(0));
    if (labels == before) break;
    dijkstra_from_labels(fg, labels);
  }
  return labels;
}

template <class W>
HopTable<W> hop_sssp(const FrozenGraph<W>& fg, const Source& source,
                     std::size_t h) {
  HopTable<W> t{source, h, {}};
  t.dist = hop_sssp_seeded(fg, source_labels<W>(fg.num_vertices(), source), h);
  return t;
}

template <class W>
std::vector<std::vector<W>> hop_sssp_profile(const FrozenGraph<W>& fg,
                                             const Source& source,
                                             std::size_t hmax) {
  std::vector<std::vector<W>> profile;
  profile.reserve(hmax + 1);
  std::vector<W> labels = source_labels<W>(fg.num_vertices(), source);
  dijkstra_from_labels(fg, labels);
  profile.push_back(labels);
  for (std::size_t h = 1; h <= hmax; ++h) {
    frozen_sweep(fg, labels, W(0));
    dijkstra_from_labels(fg, labels);
    profile.push_back(labels);
  }
  return profile;
}

template <class W>
SsspOutcome<W> bellman_ford(const Graph<W>& g, const Source& source) {
  return bellman_ford_seeded(g, source_labels<W>(g.num_vertices(), source));
}

template <class W>
SsspOutcome<W> bellman_ford_seeded(const Graph<W>& g, std::vector<W> labels) {
  const std::size_t n = g.num_vertices();
  if (labels.size() != n) throw PreconditionError("label vector size mismatch");
  std::vector<EdgeId> pred(n, kNoEdge);
  auto relax_round = [&]() {
    bool changed = false;
    for (const Edge<W>& e : g.edges()) {
      if (is_inf(labels[e.src])) continue;
      W cand = labels[e.src] + e.weight;
      if (cand < labels[e.dst]) {
        labels[e.dst] = std::move(cand);
        pred[e.dst] = e.id;
        changed = true;
      }
    }
    return changed;
  };
  bool changed = true;
  for (std::size_t round = 0; round < n && changed; ++round) {
    changed = relax_round();
  }
  SsspOutcome<W> out;
  if (!changed) {
    out.dist = std::move(labels);
    return out;
  }
  // Labels keep dropping, so a negative cycle is reachable. Cycles of the
  // predecessor graph are negative; keep relaxing until one shows up.
  for (std::size_t extra = 0; extra <= n; ++extra) {
    if (auto c = predecessor_cycle(g, pred)) {
      out.cycle = std::move(*c);
      return out;
    }
    relax_round();
  }
  throw InternalError("bellman-ford: labels diverge without a predecessor cycle");
}

template <class W>
std::vector<W> d_minus_from(const FrozenGraph<W>& fg, VertexId r) {
  const Graph<W>& g = fg.graph();
  if (r >= g.num_vertices()) throw PreconditionError("vertex out of range");
  std::vector<W> dist(g.num_vertices(), WeightTraits<W>::inf());
  dist[r] = W(0);
  bool first = true;
  run_dijkstra(dist, [&](VertexId u, auto&& relax) {
    if (first) {
      // The source is settled first; all of its out-edges are admissible.
      first = false;
      for (EdgeId id : g.out_edges(u)) {
        const Edge<W>& e = g.edge(id);
        relax(e.dst, e.weight);
      }
      return;
    }
    for (EdgeId id : g.sorted_out_nonneg(u)) {
      const Edge<W>& e = g.edge(id);
      relax(e.dst, e.weight);
    }
  });
  return dist;
}

template <class W>
std::vector<W> d_zero_to(const FrozenGraph<W>& fg, VertexId r) {
  const Graph<W>& g = fg.graph();
  if (r >= g.num_vertices()) throw PreconditionError("vertex out of range");
  std::vector<W> dist(g.num_vertices(), WeightTraits<W>::inf());
  dist[r] = W(0);
  run_dijkstra(dist, [&](VertexId v, auto&& relax) {
    for (EdgeId id : g.sorted_in_nonneg(v)) {
      const Edge<W>& e = g.edge(id);
      relax(e.src, e.weight);
    }
  });
  return dist;
}

template <class W>
SsspOutcome<W> finish_with_hops(const FrozenGraph<W>& fg,
                                std::vector<W> labels, std::size_t h) {
  const std::vector<W> seeds = labels;
  labels = hop_sssp_seeded(fg, std::move(labels), h);
  std::vector<W> swept = labels;
  const W tol = label_tolerance(fg, labels);
  SsspOutcome<W> out;
  if (!frozen_sweep(fg, swept, tol)) {
    out.dist = std::move(labels);
    return out;
  }
  SsspOutcome<W> bf = bellman_ford_seeded(fg.graph(), seeds);
  if (!bf.has_cycle()) {
    throw InternalError("residual improvement after " + std::to_string(h) +
                        " hops but no negative cycle");
  }
  return bf;
}

template <class W>
SsspOutcome<W> two_hop_finish(const FrozenGraph<W>& fg, const Source& source) {
  return finish_with_hops(fg, source_labels<W>(fg.num_vertices(), source), 2);
}

#define NEGSSSP_INSTANTIATE(W)                                                 \
  template std::vector<W> source_labels<W>(std::size_t, const Source&);        \
  template std::vector<W> dijkstra(const Graph<W>&, VertexId,                  \
                                   const EdgeFilter&);                         \
  template void dijkstra_from_labels(const FrozenGraph<W>&, std::vector<W>&);  \
  template HopTable<W> hop_sssp(const FrozenGraph<W>&, const Source&,          \
                                std::size_t);                                  \
  template std::vector<W> hop_sssp_seeded(const FrozenGraph<W>&,               \
                                          std::vector<W>, std::size_t);        \
  template std::vector<std::vector<W>> hop_sssp_profile(                       \
      const FrozenGraph<W>&, const Source&, std::size_t);                      \
  template SsspOutcome<W> bellman_ford(const Graph<W>&, const Source&);        \
  template SsspOutcome<W> bellman_ford_seeded(const Graph<W>&,                 \
                                              std::vector<W>);                 \
  template std::vector<W> d_minus_from(const FrozenGraph<W>&, VertexId);       \
  template std::vector<W> d_zero_to(const FrozenGraph<W>&, VertexId);          \
  template SsspOutcome<W> finish_with_hops(const FrozenGraph<W>&,              \
                                           std::vector<W>, std::size_t);       \
  template SsspOutcome<W> two_hop_finish(const FrozenGraph<W>&, const Source&);

NEGSSSP_INSTANTIATE(double)
NEGSSSP_INSTANTIATE(Rational)

}  // namespace negsssp
