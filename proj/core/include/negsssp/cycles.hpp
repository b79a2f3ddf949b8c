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

#ifndef NEGSSSP_CYCLES_HPP_
#define NEGSSSP_CYCLES_HPP_

#include <optional>
#include <vector>

#include "negsssp/graph.hpp"

namespace negsssp {

// Finds a negative cycle in the predecessor forest `pred` (pred[v] is the
// edge last used to lower v, or kNoEdge).
template <class W>
std::optional<NegativeCycle> predecessor_cycle(const Graph<W>& g,
                                               const std::vector<EdgeId>& pred);

// Splits a closed walk into simple cycles and returns the first negative
// one, or nullopt if none is negative. Throws PreconditionError if the edges
// do not form a closed walk.
template <class W>
std::optional<NegativeCycle> negative_simple_cycle(
    const Graph<W>& g, const std::vector<EdgeId>& closed_walk);

// Consecutive edges chain, the last returns to the first vertex and no
// vertex repeats.
template <class W>
bool is_simple_cycle(const Graph<W>& g, const NegativeCycle& c);

template <class W>
W cycle_weight(const Graph<W>& g, const NegativeCycle& c);

}  // namespace negsssp

#endif  // NEGSSSP_CYCLES_HPP_
