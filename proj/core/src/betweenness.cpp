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

#include "negsssp/betweenness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "negsssp/errors.hpp"
#include "negsssp/rng.hpp"

namespace negsssp {

template <class W>
SsspOutcome<W> bellman_ford_oracle(const Graph<W>& g) {
  return bellman_ford(g, Source{SuperSource{}});
}

std::size_t betweenness_sample_size(std::size_t k, std::size_t n,
                                    const BetweennessConfig& cfg) {
  if (cfg.b < 1.0) throw PreconditionError("betweenness parameter b < 1");
  const double ln_n = std::log(static_cast<double>(std::max<std::size_t>(n, 2)));
  const double want = std::ceil(cfg.sample_multiplier * cfg.b * ln_n);
  if (want >= static_cast<double>(k)) return k;
  return static_cast<std::size_t>(want);
}

template <class W>
BetweennessResult<W> reduce_betweenness(const FrozenGraph<W>& fg,
                                        const BetweennessConfig& cfg,
                                        const SuperSourceOracle<W>& oracle) {
  const std::vector<VertexId>& neg = fg.negative_vertices();
  const std::size_t size =
      betweenness_sample_size(neg.size(), fg.num_vertices(), cfg);
  Rng rng(cfg.seed);
  std::vector<VertexId> sample;
  sample.reserve(size);
  for (std::uint32_t i : rng.sample(static_cast<std::uint32_t>(neg.size()),
                                    static_cast<std::uint32_t>(size))) {
    sample.push_back(neg[i]);
  }
  return reduce_betweenness_with_sample(fg, std::move(sample), oracle);
}

template <class W>
BetweennessResult<W> reduce_betweenness_with_sample(
    const FrozenGraph<W>& fg, std::vector<VertexId> sample,
    const SuperSourceOracle<W>& oracle) {
  const Graph<W>& g = fg.graph();
  const std::size_t n = g.num_vertices();
  std::sort(sample.begin(), sample.end());
  std::vector<char> in_sample(n, 0);
  for (VertexId v : sample) {
    if (v >= n || !fg.is_negative_vertex(v)) {
      throw PreconditionError("sampled vertex " + std::to_string(v) +
                              " is not a negative vertex");
    }
    in_sample[v] = 1;
  }

  std::vector<EdgeSpec<W>> h_edges;
  std::vector<EdgeId> to_fg;
  std::vector<char> h_negative(n, 0);
  for (const Edge<W>& e : g.edges()) {
    if (fg.is_frozen(e.id) && !in_sample[e.src]) continue;
    h_edges.push_back({e.src, e.dst, e.weight});
    to_fg.push_back(e.id);
    if (e.weight < 0) h_negative[e.src] = 1;
  }

  BetweennessResult<W> res;
  res.sample = std::move(sample);
  res.child_k = static_cast<std::size_t>(
      std::count(h_negative.begin(), h_negative.end(), 1));

  Graph<W> h = build_graph(n, h_edges);
  SsspOutcome<W> sol = oracle(h);
  if (sol.has_cycle()) {
    NegativeCycle c = std::move(*sol.cycle);
    for (EdgeId& e : c.edges) e = to_fg.at(e);
    res.cycle = std::move(c);
    return res;
  }
  if (sol.dist.size() != n) {
    throw InternalError("oracle returned a potential of the wrong size");
  }
  res.phi = std::move(sol.dist);
  return res;
}

template <class W>
std::vector<std::vector<std::uint32_t>> brute_force_betweenness(
    const FrozenGraph<W>& fg) {
  const std::size_t n = fg.num_vertices();
  std::vector<std::vector<std::uint32_t>> count(
      n, std::vector<std::uint32_t>(n, 0));
  for (VertexId v : fg.negative_vertices()) {
    const std::vector<W> to_v = d_zero_to(fg, v);      // d^0(s, v)
    const std::vector<W> from_v = d_minus_from(fg, v);  // d^-(v, t)
    for (VertexId s = 0; s < n; ++s) {
      if (WeightTraits<W>::is_inf(to_v[s])) continue;
      for (VertexId t = 0; t < n; ++t) {
        if (WeightTraits<W>::is_inf(from_v[t])) continue;
        if (to_v[s] + from_v[t] < 0) ++count[s][t];
      }
    }
  }
  return count;
}

#define NEGSSSP_INSTANTIATE(W)                                                \
  template SsspOutcome<W> bellman_ford_oracle(const Graph<W>&);               \
  template BetweennessResult<W> reduce_betweenness(                           \
      const FrozenGraph<W>&, const BetweennessConfig&,                        \
      const SuperSourceOracle<W>&);                                           \
  template BetweennessResult<W> reduce_betweenness_with_sample(               \
      const FrozenGraph<W>&, std::vector<VertexId>,                           \
      const SuperSourceOracle<W>&);                                           \
  template std::vector<std::vector<std::uint32_t>> brute_force_betweenness(  \
      const FrozenGraph<W>&);

NEGSSSP_INSTANTIATE(double)
NEGSSSP_INSTANTIATE(Rational)

}  // namespace negsssp
