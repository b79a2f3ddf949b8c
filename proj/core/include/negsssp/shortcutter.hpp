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

#ifndef NEGSSSP_SHORTCUTTER_HPP_
#define NEGSSSP_SHORTCUTTER_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "negsssp/bidi_dijkstra.hpp"
#include "negsssp/graph.hpp"

namespace negsssp {

struct ShortcutAudit {
  EdgeId id;
  int step;  // 2..5
  VertexId r;
};

struct ShortcutReport {
  std::size_t steiner_count = 0;
  // edges_added[s] for s in 1..5; index 0 unused. Step 1 adds no edges.
  std::array<std::size_t, 6> edges_added{};
  std::uint64_t sum_sq = 0;   // sum over r of (|V_out| + |V_in|)^2
  std::uint64_t sum_lin = 0;  // sum over r of (|V_out| + |V_in|)
  std::vector<ShortcutAudit> audit;

  std::size_t total_added() const {
    std::size_t t = 0;
    for (std::size_t s : edges_added) t += s;
    return t;
  }
};

template <class W>
struct ShortcutResult {
  FrozenGraph<W> graph;
  ShortcutReport report;
  // steiner[i] is the vertex added for fg.negative_vertices()[i].
  std::vector<VertexId> steiner;
  // Walk of fg edges represented by each new edge, in id order starting at
  // fg.num_edges().
  std::vector<std::vector<EdgeId>> lineage;
};

// Adds one Steiner vertex per negative vertex and the five families of
// shortcut edges. Needs exactly one frozen out-edge per negative vertex and a
// BidiResult for each of them; PreconditionError otherwise.
template <class W>
ShortcutResult<W> shortcut_step(const FrozenGraph<W>& fg,
                                const std::vector<BidiResult<W>>& bidi);

// Runs bidi_dijkstra for every negative vertex, ascending.
template <class W>
std::vector<BidiResult<W>> bidi_all(const FrozenGraph<W>& fg);

}  // namespace negsssp

#endif  // NEGSSSP_SHORTCUTTER_HPP_
