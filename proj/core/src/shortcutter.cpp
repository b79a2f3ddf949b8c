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

#include "negsssp/shortcutter.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "negsssp/errors.hpp"

namespace negsssp {

template <class W>
std::vector<BidiResult<W>> bidi_all(const FrozenGraph<W>& fg) {
  std::vector<BidiResult<W>> out;
  out.reserve(fg.k());
  BidiWorkspace ws;
  for (VertexId r : fg.negative_vertices()) {
    out.push_back(bidi_dijkstra(fg, r, &ws));
  }
  return out;
}

template <class W>
ShortcutResult<W> shortcut_step(const FrozenGraph<W>& fg,
                                const std::vector<BidiResult<W>>& bidi) {
  const Graph<W>& g = fg.graph();
  const std::size_t n = g.num_vertices();
  const std::vector<VertexId>& neg = fg.negative_vertices();

  std::unordered_map<VertexId, const BidiResult<W>*> by_r;
  for (const BidiResult<W>& b : bidi) by_r[b.r] = &b;

  W slack(0);
  if constexpr (!WeightTraits<W>::kExact) {
    std::vector<W> ws;
    ws.reserve(g.num_edges());
    for (const Edge<W>& e : g.edges()) ws.push_back(e.weight);
    slack = WeightTraits<W>::slack(max_abs_finite<W>(ws));
  }

  std::vector<Edge<W>> edges = g.edges();
  std::vector<char> frozen = fg.frozen_mask();
  std::vector<W> phi = fg.cumulative_phi();
  ShortcutResult<W> out;
  ShortcutReport& rep = out.report;

  auto add = [&](VertexId src, VertexId dst, W w, bool is_frozen, int step,
                 VertexId r, std::vector<EdgeId> walk) {
    const EdgeId id = static_cast<EdgeId>(edges.size());
    edges.push_back({src, dst, std::move(w), id});
    frozen.push_back(is_frozen ? 1 : 0);
    out.lineage.push_back(std::move(walk));
    ++rep.edges_added[step];
    rep.audit.push_back({id, step, r});
  };
  auto concat = [](std::vector<EdgeId> a, const std::vector<EdgeId>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };

  for (std::size_t i = 0; i < neg.size(); ++i) {
    const VertexId r = neg[i];
    auto it = by_r.find(r);
    if (it == by_r.end()) {
      throw PreconditionError("no bidirectional search for negative vertex " +
                              std::to_string(r));
    }
    const BidiResult<W>& b = *it->second;

    EdgeId rr = kNoEdge;
    for (EdgeId id : g.out_edges(r)) {
      if (!fg.is_frozen(id)) continue;
      if (rr != kNoEdge) {
        throw PreconditionError("vertex " + std::to_string(r) +
                                " has more than one frozen out-edge");
      }
      rr = id;
    }
    const VertexId r_prime = g.edge(rr).dst;
    const W& w_rr = g.edge(rr).weight;

    // Step 1.
    const VertexId rt = static_cast<VertexId>(n + i);
    phi.push_back(W(0));
    out.steiner.push_back(rt);
    ++rep.steiner_count;

    const std::uint64_t size = b.v_out_size() + b.v_in_size();
    rep.sum_sq += size * size;
    rep.sum_lin += size;

    const bool finite_delta = !WeightTraits<W>::is_inf(b.delta);

    // Steps 2 and 4 walk V_out + {r}; index 0 of out_side is r.
    for (std::size_t j = 0; j < b.out_side.size(); ++j) {
      const SettledVertex<W>& s = b.out_side[j];
      const std::vector<EdgeId> path = b.out_path(j);
      for (EdgeId id : g.out_edges(s.v)) {
        const Edge<W>& e = g.edge(id);
        if (finite_delta) {
          W c = s.dist + b.delta + e.weight;
          if (!(c < -slack)) {
            if (c < 0) c = W(0);
            add(rt, e.dst, std::move(c), false, 2, r, concat(path, {id}));
          }
        }
        W c4 = s.dist + e.weight;
        const bool neg4 = c4 < 0;
        add(r, e.dst, std::move(c4), neg4, 4, r, concat(path, {id}));
      }
    }

    // Steps 3 and 5 walk V_in + {r}; index 0 of in_side is r.
    for (std::size_t j = 0; j < b.in_side.size(); ++j) {
      const SettledVertex<W>& s = b.in_side[j];
      const std::vector<EdgeId> path = b.in_path(j);
      for (EdgeId id : g.in_edges(s.v)) {
        const Edge<W>& e = g.edge(id);
        if (finite_delta) {
          W c = e.weight + s.dist - b.delta;
          if (!(c < -slack)) {
            if (c < 0) c = W(0);
            add(e.src, rt, std::move(c), false, 3, r, concat({id}, path));
          }
        }
        if (fg.is_negative_vertex(e.src)) {
          W c5 = e.weight + s.dist + w_rr;
          const bool neg5 = c5 < 0;
          add(e.src, r_prime, std::move(c5), neg5, 5, r,
              concat(concat({id}, path), {rr}));
        }
      }
    }
  }

  out.graph = FrozenGraph<W>(n + neg.size(), std::move(edges), std::move(frozen),
                             std::move(phi));
  return out;
}

#define NEGSSSP_INSTANTIATE(W)                                             \
  template std::vector<BidiResult<W>> bidi_all(const FrozenGraph<W>&);     \
  template ShortcutResult<W> shortcut_step(const FrozenGraph<W>&,          \
                                           const std::vector<BidiResult<W>>&);

NEGSSSP_INSTANTIATE(double)
NEGSSSP_INSTANTIATE(Rational)

}  // namespace negsssp
