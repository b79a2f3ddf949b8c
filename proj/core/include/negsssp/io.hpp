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

#ifndef NEGSSSP_IO_HPP_
#define NEGSSSP_IO_HPP_

#include <istream>
#include <ostream>
#include <string>

#include "negsssp/graph.hpp"

namespace negsssp {

// Graph file format:
//
//   # comment
//   p sp <n> <m>
//   a <src> <dst> <weight>     (m lines, 0-based ids)
//
// Weights are integers, decimals ("-2.5", "1e-3") or fractions ("7/3").
// Decimals are exact in rational mode. Throws ParseError on a malformed
// line and CountError when the edge count disagrees with the header.
template <class W>
Graph<W> parse_graph(std::istream& in);

template <class W>
Graph<W> parse_graph_string(const std::string& text);

template <class W>
void write_graph(std::ostream& out, const Graph<W>& g,
                 const std::string& comment = {});

}  // namespace negsssp

#endif  // NEGSSSP_IO_HPP_
