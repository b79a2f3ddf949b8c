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

#ifndef NEGSSSP_LINEAGE_HPP_
#define NEGSSSP_LINEAGE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "negsssp/graph.hpp"

namespace negsssp {

// Maps every derived edge id to the walk of older edges it stands for.
// Ids below base_edges() are edges of the input graph and map to themselves.
class EdgeLineage {
 public:
  explicit EdgeLineage(std::size_t base_edges = 0) : base_(base_edges) {}

  std::size_t base_edges() const { return base_; }
  std::size_t size() const { return base_ + derived_.size(); }

  // `id` must equal size(); every id in `walk` must be below it.
  void add(EdgeId id, std::vector<EdgeId> walk);

  // Replaces derived ids by input-graph ids, recursively.
  std::vector<EdgeId> expand(std::span<const EdgeId> edges) const;

 private:
  std::size_t base_;
  std::vector<std::vector<EdgeId>> derived_;
};

// Lifts a negative cycle of a derived graph to a negative simple cycle of
// the input graph. InternalError if the lifted walk carries no negative
// cycle.
template <class W>
NegativeCycle lift_cycle(const Graph<W>& input, const EdgeLineage& lineage,
                         const std::vector<EdgeId>& cycle_edges);

}  // namespace negsssp

#endif  // NEGSSSP_LINEAGE_HPP_
