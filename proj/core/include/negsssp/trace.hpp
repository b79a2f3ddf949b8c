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

#ifndef NEGSSSP_TRACE_HPP_
#define NEGSSSP_TRACE_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace negsssp {

// One solver invocation: the top-level call or a recursive oracle call.
struct InstanceRecord {
  int id = 0;
  int parent = -1;
  int depth = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  double threshold = 0;
  bool forced_base = false;
  std::size_t iterations = 0;
  std::size_t finish_hops = 0;
  std::size_t final_vertices = 0;
  std::size_t final_edges = 0;
};

struct IterationRecord {
  int instance = 0;
  std::size_t iter = 0;  // 1-based
  std::size_t k = 0;
  double b = 0;
  std::size_t sample = 0;
  std::size_t child_k = 0;
  int child_instance = -1;
  std::size_t vertices_before = 0;
  std::size_t edges_before = 0;
  std::size_t vertices_after = 0;
  std::size_t edges_after = 0;
  std::size_t split_edges = 0;
  std::array<std::size_t, 6> shortcut_edges{};  // index = step
  std::size_t h_before = 0;
  std::size_t h_after = 0;
  std::size_t k_after = 0;
  std::uint64_t sum_sq = 0;
  std::uint64_t sum_lin = 0;
  std::uint64_t bidi_edges_examined = 0;
  std::uint64_t bidi_heap_ops = 0;
};

struct RunTrace {
  std::vector<InstanceRecord> instances;
  std::vector<IterationRecord> iterations;
  // Wall seconds per phase, summed over all instances. Nested recursion time
  // is included in the enclosing "betweenness" phase.
  std::map<std::string, double> phase_seconds;

  std::size_t max_depth() const {
    int d = 0;
    for (const InstanceRecord& r : instances) d = std::max(d, r.depth);
    return static_cast<std::size_t>(d);
  }
};

}  // namespace negsssp

#endif  // NEGSSSP_TRACE_HPP_
