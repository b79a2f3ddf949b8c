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

#ifndef NEGSSSP_BETWEENNESS_HPP_
#define NEGSSSP_BETWEENNESS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "negsssp/graph.hpp"
#include "negsssp/hop_sssp.hpp"

namespace negsssp {

struct BetweennessConfig {
  double b = 1.0;
  std::uint32_t sample_multiplier = 4;
  std::uint64_t seed = 0;
};

// Solves a graph from the super source. Cycle ids refer to the graph passed
// in.
template <class W>
using SuperSourceOracle = std::function<SsspOutcome<W>(const Graph<W>&)>;

// Bellman-Ford from the super source.
template <class W>
SsspOutcome<W> bellman_ford_oracle(const Graph<W>& g);

template <class W>
struct BetweennessResult {
  std::vector<W> phi;                  // empty on the cycle branch
  std::optional<NegativeCycle> cycle;  // ids of fg
  std::vector<VertexId> sample;        // ascending
  std::size_t child_k = 0;             // negative vertices handed to the oracle
};

// min(k, ceil(c_s * b * ln n)).
std::size_t betweenness_sample_size(std::size_t k, std::size_t n,
                                    const BetweennessConfig& cfg);

// Samples negative vertices without replacement and solves the graph made of
// the non-frozen edges plus the frozen out-edges of the sample. Needs every
// negative vertex to have exactly one frozen out-edge.
template <class W>
BetweennessResult<W> reduce_betweenness(const FrozenGraph<W>& fg,
                                        const BetweennessConfig& cfg,
                                        const SuperSourceOracle<W>& oracle);

// Same with an explicit sample.
template <class W>
BetweennessResult<W> reduce_betweenness_with_sample(
    const FrozenGraph<W>& fg, std::vector<VertexId> sample,
    const SuperSourceOracle<W>& oracle);

// count[s][t] = |{v : d^0(s,v) + d^-(v,t) < 0}|.
template <class W>
std::vector<std::vector<std::uint32_t>> brute_force_betweenness(
    const FrozenGraph<W>& fg);

}  // namespace negsssp

#endif  // NEGSSSP_BETWEENNESS_HPP_
