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

#include "negsssp/lineage.hpp"

#include <string>
#include <utility>

#include "negsssp/cycles.hpp"
#include "negsssp/errors.hpp"

namespace negsssp {

void EdgeLineage::add(EdgeId id, std::vector<EdgeId> walk) {
  if (id != size()) {
    throw PreconditionError("lineage ids must be added in order, expected " +
                            std::to_string(size()) + " got " +
                            std::to_string(id));
  }
  for (EdgeId e : walk) {
    if (e >= id) throw PreconditionError("lineage walk refers forward");
  }
  derived_.push_back(std::move(walk));
}

std::vector<EdgeId> EdgeLineage::expand(std::span<const EdgeId> edges) const {
  std::vector<EdgeId> out;
  // Explicit stack of pending ids, consumed front to back.
  std::vector<EdgeId> stack(edges.rbegin(), edges.rend());
  while (!stack.empty()) {
    EdgeId e = stack.back();
    stack.pop_back();
    if (e < base_) {
      out.push_back(e);
      continue;
    }
    if (e >= size()) throw PreconditionError("unknown edge id in lineage");
    const std::vector<EdgeId>& walk = derived_[e - base_];
    stack.insert(stack.end(), walk.rbegin(), walk.rend());
  }
  return out;
}

template <class W>
NegativeCycle lift_cycle(const Graph<W>& input, const EdgeLineage& lineage,
                         const std::vector<EdgeId>& cycle_edges) {
  std::vector<EdgeId> walk = lineage.expand(cycle_edges);
  std::optional<NegativeCycle> c = negative_simple_cycle(input, walk);
  if (!c) throw InternalError("lifted cycle is not negative in the input graph");
  return std::move(*c);
}

template NegativeCycle lift_cycle(const Graph<double>&, const EdgeLineage&,
                                  const std::vector<EdgeId>&);
template NegativeCycle lift_cycle(const Graph<Rational>&, const EdgeLineage&,
                                  const std::vector<EdgeId>&);

}  // namespace negsssp
