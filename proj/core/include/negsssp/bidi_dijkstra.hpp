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

#ifndef NEGSSSP_BIDI_DIJKSTRA_HPP_
#define NEGSSSP_BIDI_DIJKSTRA_HPP_

#include <cstdint>
#include <vector>

#include "negsssp/graph.hpp"

namespace negsssp {

// A vertex settled by one of the two searches. `via` is the edge it was
// reached by and `parent` the index of the entry at its other end, or -1 for
// the source itself.
template <class W>
struct SettledVertex {
  VertexId v;
  W dist;
  EdgeId via;
  std::int32_t parent;
};

struct BidiStats {
  std::uint64_t edges_examined = 0;
  std::uint64_t heap_ops = 0;
};

template <class W>
struct BidiResult {
  VertexId r = kNoVertex;
  W delta;
  // Settle order; index 0 is r itself at distance 0.
  std::vector<SettledVertex<W>> out_side;  // d^-(r, v)
  std::vector<SettledVertex<W>> in_side;   // d^0(v, r)
  BidiStats stats;

  std::size_t v_out_size() const { return out_side.size() - 1; }
  std::size_t v_in_size() const { return in_side.size() - 1; }

  // Edges of the r -> out_side[i].v path, in walk order.
  std::vector<EdgeId> out_path(std::size_t i) const;
  // Edges of the in_side[i].v -> r path, in walk order.
  std::vector<EdgeId> in_path(std::size_t i) const;
};

// Scratch space reused across calls on graphs of the same size.
class BidiWorkspace {
 public:
  void reset(std::size_t n);
  bool settled(int side, VertexId v) const { return mark_[side][v] == epoch_; }
  void settle(int side, VertexId v) { mark_[side][v] = epoch_; }

 private:
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> mark_[2];
};

// Two lazy Dijkstras from r: forward over non-frozen edges plus every
// out-edge of r, backward over reversed non-frozen edges. r is settled in
// both first; the rest alternates starting with the forward search and stops
// once d1 + d2 >= 0.
template <class W>
BidiResult<W> bidi_dijkstra(const FrozenGraph<W>& fg, VertexId r,
                            BidiWorkspace* ws = nullptr);

}  // namespace negsssp

#endif  // NEGSSSP_BIDI_DIJKSTRA_HPP_
