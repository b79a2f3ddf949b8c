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

#ifndef NEGSSSP_NEG_TRANSFORM_HPP_
#define NEGSSSP_NEG_TRANSFORM_HPP_

#include <vector>

#include "negsssp/graph.hpp"

namespace negsssp {

struct SplitVertex {
  VertexId u;
  VertexId u_prime;
  EdgeId link;  // the new frozen edge (u, u')
};

template <class W>
struct SplitResult {
  FrozenGraph<W> graph;
  std::vector<SplitVertex> mapping;  // ascending by u
};

// Gives every negative vertex exactly one frozen out-edge.
//
// For each negative vertex u, in ascending order, a vertex u' is appended
// together with a frozen edge (u, u') carrying the smallest frozen out-weight
// w1 of u (ties by lowest id). Every frozen out-edge (u, v, w) is moved to
// (u', v, w - w1), keeps its id and becomes non-frozen. Non-frozen out-edges
// of u stay put so zero-hop paths through u are untouched.
template <class W>
SplitResult<W> split_negative_vertices(const FrozenGraph<W>& fg);

}  // namespace negsssp

#endif  // NEGSSSP_NEG_TRANSFORM_HPP_
