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

#include "negsssp/bidi_dijkstra.hpp"

#include <algorithm>
#include <queue>
#include <span>

#include "negsssp/errors.hpp"

namespace negsssp {

template <class W>
std::vector<EdgeId> BidiResult<W>::out_path(std::size_t i) const {
  std::vector<EdgeId> path;
  for (std::int32_t j = static_cast<std::int32_t>(i); out_side[j].parent >= 0;
       j = out_side[j].parent) {
    path.push_back(out_side[j].via);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

template <class W>
std::vector<EdgeId> BidiResult<W>::in_path(std::size_t i) const {
  // The backward search grows from r, so parents lead toward r.
  std::vector<EdgeId> path;
  for (std::int32_t j = static_cast<std::int32_t>(i); in_side[j].parent >= 0;
       j = in_side[j].parent) {
    path.push_back(in_side[j].via);
  }
  return path;
}

void BidiWorkspace::reset(std::size_t n) {
  for (auto& m : mark_) {
    if (m.size() != n) m.assign(n, 0);
  }
  if (++epoch_ == 0) {
    for (auto& m : mark_) std::fill(m.begin(), m.end(), 0);
    epoch_ = 1;
  }
}

namespace {

template <class W>
struct Item {
  W dist;
  VertexId v;
  std::int32_t owner;
  EdgeId via;
  friend bool operator>(const Item& a, const Item& b) {
    if (a.dist < b.dist) return false;
    if (b.dist < a.dist) return true;
    if (a.v != b.v) return a.v > b.v;
    return a.owner > b.owner;
  }
};

template <class W>
class Search {
 public:
  Search(const Graph<W>& g, int side, BidiWorkspace& ws, BidiStats& stats,
         std::vector<SettledVertex<W>>& settled)
      : g_(g), side_(side), ws_(ws), stats_(stats), settled_(settled) {}

  void start(VertexId r, std::span<const EdgeId> list) {
    ws_.settle(side_, r);
    settled_.push_back({r, W(0), kNoEdge, -1});
    lists_.push_back(list);
    cursor_.push_back(0);
    push_next(0);
  }

  // Drops heap tops whose vertex is already settled. Returns the smallest
  // tentative distance to an unsettled vertex.
  W peek() {
    while (!heap_.empty() && ws_.settled(side_, heap_.top().v)) {
      std::int32_t owner = heap_.top().owner;
      heap_.pop();
      ++stats_.heap_ops;
      push_next(owner);
    }
    return heap_.empty() ? WeightTraits<W>::inf() : heap_.top().dist;
  }

  void settle_top() {
    Item<W> top = heap_.top();
    heap_.pop();
    ++stats_.heap_ops;
    ws_.settle(side_, top.v);
    settled_.push_back({top.v, top.dist, top.via, top.owner});
    lists_.push_back(side_ == 0 ? g_.sorted_out_nonneg(top.v)
                                : g_.sorted_in_nonneg(top.v));
    cursor_.push_back(0);
    push_next(top.owner);
    push_next(static_cast<std::int32_t>(settled_.size() - 1));
  }

 private:
  void push_next(std::int32_t owner) {
    std::span<const EdgeId> list = lists_[owner];
    std::size_t& c = cursor_[owner];
    while (c < list.size()) {
      const Edge<W>& e = g_.edge(list[c++]);
      ++stats_.edges_examined;
      VertexId t = side_ == 0 ? e.dst : e.src;
      if (ws_.settled(side_, t)) continue;
      heap_.push({settled_[owner].dist + e.weight, t, owner, e.id});
      ++stats_.heap_ops;
      return;
    }
  }

  const Graph<W>& g_;
  int side_;
  BidiWorkspace& ws_;
  BidiStats& stats_;
  std::vector<SettledVertex<W>>& settled_;
  std::vector<std::span<const EdgeId>> lists_;
  std::vector<std::size_t> cursor_;
  std::priority_queue<Item<W>, std::vector<Item<W>>, std::greater<>> heap_;
};

}  // namespace

template <class W>
BidiResult<W> bidi_dijkstra(const FrozenGraph<W>& fg, VertexId r,
                            BidiWorkspace* ws) {
  const Graph<W>& g = fg.graph();
  if (r >= g.num_vertices()) throw PreconditionError("vertex out of range");
  BidiWorkspace local;
  BidiWorkspace& work = ws != nullptr ? *ws : local;
  work.reset(g.num_vertices());

  // All out-edges of r are admissible in the forward search, negative or not.
  std::vector<EdgeId> r_out(g.out_edges(r).begin(), g.out_edges(r).end());
  std::sort(r_out.begin(), r_out.end(), [&](EdgeId a, EdgeId b) {
    const W& wa = g.edge(a).weight;
    const W& wb = g.edge(b).weight;
    if (wa < wb) return true;
    if (wb < wa) return false;
    return a < b;
  });

  BidiResult<W> res;
  res.r = r;
  Search<W> fwd(g, 0, work, res.stats, res.out_side);
  Search<W> bwd(g, 1, work, res.stats, res.in_side);
  fwd.start(r, r_out);
  bwd.start(r, g.sorted_in_nonneg(r));

  int last = -1;
  int turn = 0;
  W d1, d2;
  while (true) {
    d1 = fwd.peek();
    d2 = bwd.peek();
    if (!(d1 + d2 < 0)) break;
    if (turn == 0) {
      fwd.settle_top();
    } else {
      bwd.settle_top();
    }
    last = turn;
    turn ^= 1;
  }
  res.delta = last == 1 ? -d1 : d2;
  return res;
}

template struct BidiResult<double>;
template struct BidiResult<Rational>;
template BidiResult<double> bidi_dijkstra(const FrozenGraph<double>&, VertexId,
                                          BidiWorkspace*);
template BidiResult<Rational> bidi_dijkstra(const FrozenGraph<Rational>&,
                                            VertexId, BidiWorkspace*);

}  // namespace negsssp
