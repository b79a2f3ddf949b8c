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

#include "negsssp/layered.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "negsssp/cycles.hpp"
#include "negsssp/errors.hpp"
#include "negsssp/rng.hpp"

namespace negsssp {

template <class W>
LayeredInstance<W> build_layered(const FrozenGraph<W>& fg, std::size_t h,
                                 double b, std::uint64_t seed,
                                 std::uint32_t sample_multiplier) {
  const std::size_t n = fg.num_vertices();
  BetweennessConfig cfg;
  cfg.b = b;
  cfg.sample_multiplier = sample_multiplier;
  const std::size_t size = betweenness_sample_size(n, n, cfg);
  Rng rng(seed);
  std::vector<VertexId> s;
  for (std::uint32_t v : rng.sample(static_cast<std::uint32_t>(n),
                                    static_cast<std::uint32_t>(size))) {
    s.push_back(v);
  }
  return build_layered_with_sample(fg, h, std::move(s));
}

template <class W>
LayeredInstance<W> build_layered_with_sample(const FrozenGraph<W>& fg,
                                             std::size_t h,
                                             std::vector<VertexId> sample) {
  if (h == 0) throw PreconditionError("layered instance needs h >= 1");
  const Graph<W>& g = fg.graph();
  const std::size_t n = g.num_vertices();
  std::sort(sample.begin(), sample.end());
  sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
  for (VertexId v : sample) {
    if (v >= n) throw PreconditionError("sample vertex out of range");
  }

  LayeredInstance<W> inst;
  inst.n = n;
  inst.h = h;
  W most_negative(0);
  for (const Edge<W>& e : g.edges()) {
    if (fg.is_frozen(e.id) && e.weight < most_negative) {
      most_negative = e.weight;
    }
  }
  inst.M = W(1) - most_negative;
  inst.sample = sample;

  std::vector<Edge<W>> edges;
  auto add = [&](VertexId s, VertexId d, W w, LayerEdgeKind kind, EdgeId base) {
    edges.push_back({s, d, std::move(w), 0});
    inst.provenance.push_back({kind, base});
  };

  for (std::size_t c = 0; c < inst.copies(); ++c) {
    for (const Edge<W>& e : g.edges()) {
      if (fg.is_frozen(e.id)) continue;
      add(inst.vertex(c, e.src), inst.vertex(c, e.dst), e.weight,
          LayerEdgeKind::kCopy, e.id);
    }
  }
  auto link = [&](std::size_t from, std::size_t to) {
    for (VertexId v = 0; v < n; ++v) {
      add(inst.vertex(from, v), inst.vertex(to, v), inst.M, LayerEdgeKind::kStay,
          kNoEdge);
    }
    for (const Edge<W>& e : g.edges()) {
      if (!fg.is_frozen(e.id)) continue;
      add(inst.vertex(from, e.src), inst.vertex(to, e.dst), e.weight + inst.M,
          LayerEdgeKind::kLifted, e.id);
    }
  };
  for (std::size_t i = 0; i < h; ++i) {
    link(LayeredInstance<W>::forward(i), LayeredInstance<W>::forward(i + 1));
    link(inst.backward(i + 1), inst.backward(i));
  }
  const W jump = W(-2 * static_cast<long>(h)) * inst.M;
  for (VertexId v : sample) {
    add(inst.vertex(LayeredInstance<W>::forward(h), v),
        inst.vertex(inst.backward(h), v), jump, LayerEdgeKind::kJump, kNoEdge);
  }
  inst.graph = Graph<W>(n * inst.copies(), std::move(edges));
  return inst;
}

template <class W>
SsspOutcome<W> extract_layered_potential(const LayeredInstance<W>& inst,
                                         const FrozenGraph<W>& fg,
                                         const SuperSourceOracle<W>& oracle) {
  SsspOutcome<W> sol = oracle(inst.graph);
  SsspOutcome<W> out;
  if (sol.has_cycle()) {
    // Stay and jump edges do not move in fg; the M terms cancel around any
    // closed walk.
    std::vector<EdgeId> walk;
    for (EdgeId e : sol.cycle->edges) {
      const LayerEdgeInfo& p = inst.provenance[e];
      if (p.base != kNoEdge) walk.push_back(p.base);
    }
    std::optional<NegativeCycle> c = negative_simple_cycle(fg.graph(), walk);
    if (!c) throw InternalError("layered cycle does not map to a negative cycle");
    out.cycle = std::move(*c);
    return out;
  }
  out.dist.assign(sol.dist.begin(), sol.dist.begin() + inst.n);
  return out;
}

template <class W>
HopReducer<W> two_copy_hop_reducer(const Graph<W>& g,
                                   const SuperSourceOracle<W>& oracle) {
  HopReducer<W> out;
  SsspOutcome<W> sol = oracle(g);
  if (sol.has_cycle()) {
    out.cycle = std::move(sol.cycle);
    return out;
  }
  const std::size_t n = g.num_vertices();
  out.phi = std::move(sol.dist);
  W phi_max = out.phi.front();
  for (const W& p : out.phi) phi_max = std::max(phi_max, p);

  std::vector<Edge<W>> edges;
  std::vector<char> frozen;
  auto add = [&](VertexId s, VertexId d, W w, bool f) {
    edges.push_back({s, d, std::move(w), 0});
    frozen.push_back(f ? 1 : 0);
  };
  for (const Edge<W>& e : g.edges()) {
    if (!(e.weight < 0)) add(e.src, e.dst, e.weight, false);
  }
  for (const Edge<W>& e : g.edges()) {
    W w = e.weight + out.phi[e.src] - out.phi[e.dst];
    if (w < 0) w = W(0);  // float round-off only; exact mode is already >= 0
    add(static_cast<VertexId>(n + e.src), static_cast<VertexId>(n + e.dst),
        std::move(w), false);
  }
  for (VertexId v = 0; v < n; ++v) {
    add(v, static_cast<VertexId>(n + v), phi_max - out.phi[v], false);
  }
  for (VertexId v = 0; v < n; ++v) {
    add(static_cast<VertexId>(n + v), v, out.phi[v] - phi_max, true);
  }
  out.graph = FrozenGraph<W>(2 * n, std::move(edges), std::move(frozen),
                             std::vector<W>(2 * n, W(0)));
  return out;
}

#define NEGSSSP_INSTANTIATE(W)                                                \
  template LayeredInstance<W> build_layered(const FrozenGraph<W>&,            \
                                            std::size_t, double,              \
                                            std::uint64_t, std::uint32_t);    \
  template LayeredInstance<W> build_layered_with_sample(                      \
      const FrozenGraph<W>&, std::size_t, std::vector<VertexId>);             \
  template SsspOutcome<W> extract_layered_potential(                          \
      const LayeredInstance<W>&, const FrozenGraph<W>&,                       \
      const SuperSourceOracle<W>&);                                           \
  template HopReducer<W> two_copy_hop_reducer(const Graph<W>&,                \
                                              const SuperSourceOracle<W>&);

NEGSSSP_INSTANTIATE(double)
NEGSSSP_INSTANTIATE(Rational)

}  // namespace negsssp
