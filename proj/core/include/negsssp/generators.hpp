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

#ifndef NEGSSSP_GENERATORS_HPP_
#define NEGSSSP_GENERATORS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "negsssp/graph.hpp"

namespace negsssp {

// m random edges (no self-loops, parallel edges allowed) with integer weights
// w = w' + psi(src) - psi(dst), w' uniform in [0, weight_range]. Every cycle
// weighs sum(w') >= 0. psi is scaled by binary search so that the number of
// negative edges is the largest reachable value not above
// round(neg_fraction * m). Needs n >= 2 when m > 0.
template <class W>
Graph<W> gen_potential_shifted(std::size_t n, std::size_t m,
                               double neg_fraction, std::int64_t weight_range,
                               std::uint64_t seed);

template <class W>
struct PlantedCycle {
  Graph<W> graph;
  std::vector<EdgeId> cycle_edges;
};

// A shifted base graph (neg_fraction 0.2, weight_range 10) plus a cycle on
// cycle_len distinct random vertices weighing cycle_weight. If vertex 0 is
// not on the cycle, a zero-weight edge from 0 into it is added.
template <class W>
PlantedCycle<W> gen_planted_cycle(std::size_t n, std::size_t m,
                                  std::size_t cycle_len,
                                  std::int64_t cycle_weight, std::uint64_t seed);

// Shortcut edge the gadget is expected to produce.
template <class W>
struct ExpectedShortcut {
  VertexId src;
  VertexId dst;         // ignored when the edge enters or leaves r~
  bool into_steiner;    // (src, r~)
  bool out_of_steiner;  // (r~, dst)
  W max_weight;
};

// A path with three consecutive frozen edges (u,u'), (r,r'), (v,v') arranged
// so one of the three shortcut cases applies at r. Every negative vertex has
// a single out-edge, so the graph is already in split form.
template <class W>
struct ShortcutGadget {
  Graph<W> graph;
  int which = 0;
  VertexId s = 0, t = 0;
  VertexId u = 0, u_prime = 0, r = 0, r_prime = 0, v = 0, v_prime = 0;
  W delta;  // expected threshold at r
  // Weight of the s -> t path and of the segment the shortcut replaces.
  W path_weight;
  W segment_weight;
  std::vector<ExpectedShortcut<W>> expected;
  std::string description;
};

// which in {1, 2, 3}; PreconditionError otherwise.
template <class W>
ShortcutGadget<W> gen_shortcut_gadget(int which);

}  // namespace negsssp

#endif  // NEGSSSP_GENERATORS_HPP_
