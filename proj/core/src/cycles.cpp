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

#include "negsssp/cycles.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "negsssp/errors.hpp"

namespace negsssp {

template <class W>
std::optional<NegativeCycle> predecessor_cycle(
    const Graph<W>& g, const std::vector<EdgeId>& pred) {
  const std::size_t n = g.num_vertices();
  // 0 = unseen, otherwise the walk number that first reached the vertex.
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t walk = 0;
  for (VertexId start = 0; start < n; ++start) {
    if (seen[start] != 0) continue;
    ++walk;
    VertexId v = start;
    while (v != kNoVertex && seen[v] == 0) {
      seen[v] = walk;
      v = pred[v] == kNoEdge ? kNoVertex : g.edge(pred[v]).src;
    }
    if (v == kNoVertex || seen[v] != walk) continue;

    // v lies on a cycle of the walk just taken; collect it backwards.
    NegativeCycle c;
    VertexId x = v;
    do {
      c.vertices.push_back(x);
      c.edges.push_back(pred[x]);
      x = g.edge(pred[x]).src;
    } while (x != v);
    // Backwards we have vertices x_i with pred edge x_{i+1} -> x_i.
    std::reverse(c.vertices.begin(), c.vertices.end());
    std::reverse(c.edges.begin(), c.edges.end());
    // Now edges[i] enters vertices[i]; rotate so edges[i] leaves it.
    std::rotate(c.edges.begin(), c.edges.begin() + 1, c.edges.end());
    if (cycle_weight(g, c) < 0) return c;
  }
  return std::nullopt;
}

template <class W>
std::optional<NegativeCycle> negative_simple_cycle(
    const Graph<W>& g, const std::vector<EdgeId>& closed_walk) {
  if (closed_walk.empty()) return std::nullopt;
  for (std::size_t i = 0; i < closed_walk.size(); ++i) {
    const Edge<W>& a = g.edge(closed_walk[i]);
    const Edge<W>& b = g.edge(closed_walk[(i + 1) % closed_walk.size()]);
    if (a.dst != b.src) throw PreconditionError("edges do not form a closed walk");
  }
  std::vector<VertexId> path{g.edge(closed_walk.front()).src};
  std::vector<EdgeId> path_edges;
  std::unordered_map<VertexId, std::size_t> pos{{path.front(), 0}};
  for (EdgeId id : closed_walk) {
    const VertexId v = g.edge(id).dst;
    path_edges.push_back(id);
    auto it = pos.find(v);
    if (it == pos.end()) {
      pos[v] = path.size();
      path.push_back(v);
      continue;
    }
    const std::size_t j = it->second;
    NegativeCycle c;
    c.vertices.assign(path.begin() + j, path.end());
    c.edges.assign(path_edges.begin() + j, path_edges.end());
    if (cycle_weight(g, c) < 0) return c;
    for (std::size_t t = j + 1; t < path.size(); ++t) pos.erase(path[t]);
    path.resize(j + 1);
    path_edges.resize(j);
  }
  return std::nullopt;
}

template <class W>
bool is_simple_cycle(const Graph<W>& g, const NegativeCycle& c) {
  if (c.vertices.empty() || c.vertices.size() != c.edges.size()) return false;
  std::unordered_set<VertexId> distinct(c.vertices.begin(), c.vertices.end());
  if (distinct.size() != c.vertices.size()) return false;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    if (c.edges[i] >= g.num_edges()) return false;
    const Edge<W>& e = g.edge(c.edges[i]);
    if (e.src != c.vertices[i]) return false;
    if (e.dst != c.vertices[(i + 1) % c.vertices.size()]) return false;
  }
  return true;
}

template <class W>
W cycle_weight(const Graph<W>& g, const NegativeCycle& c) {
  return walk_weight(g, std::span<const EdgeId>(c.edges));
}

#define NEGSSSP_INSTANTIATE(W)                                               \
  template std::optional<NegativeCycle> predecessor_cycle(                   \
      const Graph<W>&, const std::vector<EdgeId>&);                          \
  template std::optional<NegativeCycle> negative_simple_cycle(               \
      const Graph<W>&, const std::vector<EdgeId>&);                          \
  template bool is_simple_cycle(const Graph<W>&, const NegativeCycle&);      \
  template W cycle_weight(const Graph<W>&, const NegativeCycle&);

NEGSSSP_INSTANTIATE(double)
NEGSSSP_INSTANTIATE(Rational)

}  // namespace negsssp
