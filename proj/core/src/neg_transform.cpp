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

#include "negsssp/neg_transform.hpp"

namespace negsssp {

template <class W>
SplitResult<W> split_negative_vertices(const FrozenGraph<W>& fg) {
  const Graph<W>& g = fg.graph();
  const std::size_t n = g.num_vertices();
  const std::vector<VertexId>& neg = fg.negative_vertices();

  std::vector<Edge<W>> edges = g.edges();
  std::vector<char> frozen = fg.frozen_mask();
  std::vector<W> phi = fg.cumulative_phi();
  SplitResult<W> out;
  out.mapping.reserve(neg.size());

  for (std::size_t i = 0; i < neg.size(); ++i) {
    const VertexId u = neg[i];
    const VertexId up = static_cast<VertexId>(n + i);
    EdgeId best = kNoEdge;
    for (EdgeId id : g.out_edges(u)) {
      if (!fg.is_frozen(id)) continue;
      if (best == kNoEdge || g.edge(id).weight < g.edge(best).weight) best = id;
    }
    const W w1 = g.edge(best).weight;
    for (EdgeId id : g.out_edges(u)) {
      if (!fg.is_frozen(id)) continue;
      edges[id].src = up;
      edges[id].weight = g.edge(id).weight - w1;
      frozen[id] = 0;
    }
    const EdgeId link = static_cast<EdgeId>(edges.size());
    edges.push_back({u, up, w1, link});
    frozen.push_back(1);
    phi.push_back(W(0));
    out.mapping.push_back({u, up, link});
  }
  out.graph = FrozenGraph<W>(n + neg.size(), std::move(edges), std::move(frozen),
                             std::move(phi));
  return out;
}

template SplitResult<double> split_negative_vertices(const FrozenGraph<double>&);
template SplitResult<Rational> split_negative_vertices(
    const FrozenGraph<Rational>&);

}  // namespace negsssp
