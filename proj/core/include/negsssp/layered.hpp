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

#ifndef NEGSSSP_LAYERED_HPP_
#define NEGSSSP_LAYERED_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "negsssp/betweenness.hpp"
#include "negsssp/graph.hpp"
#include "negsssp/hop_sssp.hpp"

namespace negsssp {

enum class LayerEdgeKind : std::uint8_t {
  kCopy,    // non-frozen edge inside one copy
  kLifted,  // frozen edge moving one layer along a chain, weight w + M
  kStay,    // v -> v one layer along a chain, weight M
  kJump,    // w_fwd_h -> w_bwd_h for w in S, weight -2hM
};

struct LayerEdgeInfo {
  LayerEdgeKind kind;
  EdgeId base;  // fg edge id, kNoEdge for stay and jump edges
};

// Copies are numbered 0 (the base copy), 1..h (forward chain) and h+1..2h
// (backward chain, copy h+i is backward layer i). Vertex v of copy c is
// c * n + v.
template <class W>
struct LayeredInstance {
  Graph<W> graph;
  std::size_t n = 0;
  std::size_t h = 0;
  W M;
  std::vector<VertexId> sample;  // ascending
  std::vector<LayerEdgeInfo> provenance;

  std::size_t copies() const { return 2 * h + 1; }
  VertexId vertex(std::size_t copy, VertexId v) const {
    return static_cast<VertexId>(copy * n + v);
  }
  static std::size_t forward(std::size_t i) { return i; }
  std::size_t backward(std::size_t i) const { return i == 0 ? 0 : h + i; }
};

// Samples min(n, ceil(c_s * b * ln n)) vertices uniformly and builds the
// layered instance. PreconditionError if h == 0.
template <class W>
LayeredInstance<W> build_layered(const FrozenGraph<W>& fg, std::size_t h,
                                 double b, std::uint64_t seed,
                                 std::uint32_t sample_multiplier = 4);

template <class W>
LayeredInstance<W> build_layered_with_sample(const FrozenGraph<W>& fg,
                                             std::size_t h,
                                             std::vector<VertexId> sample);

// phi(v) = distance from the super source to v in copy 0. A cycle is mapped
// back to a negative simple cycle of fg.
template <class W>
SsspOutcome<W> extract_layered_potential(const LayeredInstance<W>& inst,
                                         const FrozenGraph<W>& fg,
                                         const SuperSourceOracle<W>& oracle);

// Two copies of g joined per vertex. Copy 1 (ids 0..n-1) holds the
// non-negative edges of g, copy 2 (ids n..2n-1) holds all edges reweighted by
// phi = d(V, .). The n edges (v2, v1) are the frozen set.
template <class W>
struct HopReducer {
  FrozenGraph<W> graph;
  std::vector<W> phi;
  std::optional<NegativeCycle> cycle;  // ids of g; graph is empty then

  static VertexId first(VertexId v) { return v; }
  VertexId second(VertexId v) const {
    return static_cast<VertexId>(phi.size() + v);
  }
};

template <class W>
HopReducer<W> two_copy_hop_reducer(const Graph<W>& g,
                                   const SuperSourceOracle<W>& oracle);

}  // namespace negsssp

#endif  // NEGSSSP_LAYERED_HPP_
