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

#ifndef NEGSSSP_HOP_SSSP_HPP_
#define NEGSSSP_HOP_SSSP_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "negsssp/graph.hpp"

namespace negsssp {

template <class W>
struct HopTable {
  Source source;
  std::size_t h = 0;
  std::vector<W> dist;
};

// Distances from a source, or a negative cycle. Cycle edge ids refer to the
// graph the outcome was computed on.
template <class W>
struct SsspOutcome {
  std::vector<W> dist;
  std::optional<NegativeCycle> cycle;

  bool has_cycle() const { return cycle.has_value(); }
};

// Initial labels for a source: 0 at the source (every vertex for the super
// source), +inf elsewhere.
template <class W>
std::vector<W> source_labels(std::size_t n, const Source& source);

using EdgeFilter = std::function<bool(EdgeId)>;

// Dijkstra over the edges accepted by `filter`. Negative accepted edges are
// allowed only when they leave `source`; otherwise PreconditionError.
template <class W>
std::vector<W> dijkstra(const Graph<W>& g, VertexId source,
                        const EdgeFilter& filter);

// Multi-source Dijkstra over non-frozen edges starting from `labels`, which
// are lowered in place.
template <class W>
void dijkstra_from_labels(const FrozenGraph<W>& fg, std::vector<W>& labels);

// d^h(source, .) where hops count frozen edges.
template <class W>
HopTable<W> hop_sssp(const FrozenGraph<W>& fg, const Source& source,
                     std::size_t h);

// Same rounds, starting from arbitrary labels.
template <class W>
std::vector<W> hop_sssp_seeded(const FrozenGraph<W>& fg, std::vector<W> labels,
                               std::size_t h);

// profile[h] = d^h(source, .) for every h in [0, hmax].
template <class W>
std::vector<std::vector<W>> hop_sssp_profile(const FrozenGraph<W>& fg,
                                             const Source& source,
                                             std::size_t hmax);

template <class W>
SsspOutcome<W> bellman_ford(const Graph<W>& g, const Source& source);

template <class W>
SsspOutcome<W> bellman_ford_seeded(const Graph<W>& g, std::vector<W> labels);

// d^-(r, .): Dijkstra over non-frozen edges plus every out-edge of r.
template <class W>
std::vector<W> d_minus_from(const FrozenGraph<W>& fg, VertexId r);

// result[v] = d^0(v, r).
template <class W>
std::vector<W> d_zero_to(const FrozenGraph<W>& fg, VertexId r);

// hop_sssp with `h` hops from `labels`, then one more frozen sweep. If the
// sweep lowers a label, a negative cycle reachable from the seeds is
// extracted with Bellman-Ford; InternalError if there is none.
template <class W>
SsspOutcome<W> finish_with_hops(const FrozenGraph<W>& fg,
                                std::vector<W> labels, std::size_t h);

template <class W>
SsspOutcome<W> two_hop_finish(const FrozenGraph<W>& fg, const Source& source);

}  // namespace negsssp

#endif  // NEGSSSP_HOP_SSSP_HPP_
