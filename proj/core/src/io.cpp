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

#include "negsssp/io.hpp"

#include <charconv>
#include <sstream>
#include <string_view>
#include <vector>

#include "negsssp/errors.hpp"

namespace negsssp {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_count(std::string_view tok, std::size_t line,
                          const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" +
                               std::string(tok) + "'");
  }
  return v;
}

}  // namespace

template <class W>
Graph<W> parse_graph(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<EdgeSpec<W>> edges;
  while (std::getline(in, raw)) {
    ++line;
    std::vector<std::string_view> tok = split_ws(raw);
    if (tok.empty() || tok[0][0] == '#' || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(line, "duplicate header");
      if (tok.size() != 4 || tok[1] != "sp") {
        throw ParseError(line, "expected 'p sp <n> <m>'");
      }
      n = parse_count(tok[2], line, "vertex count");
      m = parse_count(tok[3], line, "edge count");
      if (n == 0) throw ParseError(line, "graph needs at least one vertex");
      if (n >= kNoVertex || m >= kNoEdge) {
        throw ParseError(line, "graph too large");
      }
      have_header = true;
      edges.reserve(m);
      continue;
    }
    if (tok[0] == "a") {
      if (!have_header) throw ParseError(line, "edge before header");
      if (tok.size() != 4) throw ParseError(line, "expected 'a <src> <dst> <w>'");
      std::uint64_t s = parse_count(tok[1], line, "source id");
      std::uint64_t d = parse_count(tok[2], line, "target id");
      if (s >= n || d >= n) throw ParseError(line, "vertex id out of range");
      W w;
      try {
        w = WeightTraits<W>::parse(tok[3]);
      } catch (const std::exception& e) {
        throw ParseError(line, e.what());
      }
      if (WeightTraits<W>::is_inf(w)) {
        throw ParseError(line, "edge weight must be finite");
      }
      if (edges.size() == m) {
        throw CountError("header declares " + std::to_string(m) +
                         " edges but more are present (line " +
                         std::to_string(line) + ")");
      }
      edges.push_back({static_cast<VertexId>(s), static_cast<VertexId>(d), w});
      continue;
    }
    throw ParseError(line, "unknown line type '" + std::string(tok[0]) + "'");
  }
  if (!have_header) throw ParseError(line, "missing 'p sp' header");
  if (edges.size() != m) {
    throw CountError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return build_graph(static_cast<std::size_t>(n), edges);
}

template <class W>
Graph<W> parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph<W>(in);
}

template <class W>
void write_graph(std::ostream& out, const Graph<W>& g,
                 const std::string& comment) {
  if (!comment.empty()) {
    std::istringstream lines(comment);
    std::string l;
    while (std::getline(lines, l)) out << "# " << l << '\n';
  }
  out << "p sp " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge<W>& e : g.edges()) {
    out << "a " << e.src << ' ' << e.dst << ' '
        << WeightTraits<W>::to_string(e.weight) << '\n';
  }
}

#define NEGSSSP_INSTANTIATE(W)                                           \
  template Graph<W> parse_graph<W>(std::istream&);                       \
  template Graph<W> parse_graph_string<W>(const std::string&);           \
  template void write_graph(std::ostream&, const Graph<W>&, const std::string&);

NEGSSSP_INSTANTIATE(double)
NEGSSSP_INSTANTIATE(Rational)

}  // namespace negsssp
