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

#ifndef NEGSSSP_REPORT_HPP_
#define NEGSSSP_REPORT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "negsssp/graph.hpp"
#include "negsssp/hop_sssp.hpp"
#include "negsssp/trace.hpp"

namespace negsssp {

inline constexpr int kReportSchema = 1;

// Text report:
//   d <v> <dist>            one per vertex, "inf" if unreachable
// or
//   NEGATIVE CYCLE
//   c <v>                   one per cycle vertex
//   cycle_weight <w>
template <class W>
std::string render_text(const Graph<W>& g, const SsspOutcome<W>& outcome);

struct ReportOptions {
  std::string algorithm;
  std::string mode;
  long long source = -1;  // -1 for the super source
  bool timings = false;
  bool include_trace = true;
};

// JSON report with "schema": 1. Phase timings are written only when
// requested so that fixed-seed reports are byte-identical.
template <class W>
std::string render_json(const Graph<W>& g, const SsspOutcome<W>& outcome,
                        const RunTrace* trace, const ReportOptions& opts);

std::string trace_to_json(const RunTrace& trace, bool timings);

struct ParsedReport {
  int schema = 0;
  std::string status;  // "ok" or "negative_cycle"
  std::string algorithm;
  std::string mode;
  long long source = -1;
  std::vector<std::string> dist;
  std::vector<VertexId> cycle;
  std::vector<EdgeId> cycle_edges;
  std::string cycle_weight;
  bool has_trace = false;
  RunTrace trace;
};

// Inverse of render_json. Throws ParseError on malformed input.
ParsedReport parse_report_json(std::string_view text);

}  // namespace negsssp

#endif  // NEGSSSP_REPORT_HPP_
