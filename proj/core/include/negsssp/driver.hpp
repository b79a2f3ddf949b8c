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

#ifndef NEGSSSP_DRIVER_HPP_
#define NEGSSSP_DRIVER_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "negsssp/graph.hpp"
#include "negsssp/hop_sssp.hpp"
#include "negsssp/trace.hpp"

namespace negsssp {

struct SolverConfig {
  double C = 4.0;
  std::size_t max_iterations = 100;
  std::uint64_t seed = 0;
  std::uint32_t sample_multiplier = 4;
  // Replaces 4 C^3 ln^3 n when set.
  std::optional<double> base_threshold;
  bool collect_timings = true;
};

// 4 C^3 ln^3 n, or the override.
double base_case_threshold(const SolverConfig& cfg, std::size_t n);

template <class W>
struct SolveResult {
  SsspOutcome<W> outcome;  // cycle ids refer to the input graph
  RunTrace trace;
};

template <class W>
struct MultiSolveResult {
  std::vector<SsspOutcome<W>> outcomes;
  RunTrace trace;
};

// Exact distances from `source`, or a negative cycle of g. A cycle found
// while preprocessing may be unreachable from the source.
template <class W>
SolveResult<W> solve(const Graph<W>& g, const Source& source,
                     const SolverConfig& cfg = {});

// Preprocesses once and finishes each source separately.
template <class W>
MultiSolveResult<W> solve_multi_source(const Graph<W>& g,
                                       const std::vector<Source>& sources,
                                       const SolverConfig& cfg = {});

}  // namespace negsssp

#endif  // NEGSSSP_DRIVER_HPP_
