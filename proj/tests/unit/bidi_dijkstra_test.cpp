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

#include <gtest/gtest.h>

#include <cmath>

#include "negsssp/bidi_dijkstra.hpp"
#include "negsssp/generators.hpp"
#include "negsssp/hop_sssp.hpp"
#include "negsssp/neg_transform.hpp"
#include "bidi_check.hpp"
#include "test_support.hpp"

namespace negsssp {
namespace {

using testing::check_bidi;
using testing::make_graph;
using testing::Q;

TEST(BidiTest, SingleOutSettle) {
  // r = 0, a = 1, b = 2.
  FrozenGraph<Q> fg = freeze(make_graph(3, {{0, 1, -4}, {2, 0, 1}}));
  BidiResult<Q> b = bidi_dijkstra(fg, 0);
  EXPECT_EQ(b.delta, Q(1));
  ASSERT_EQ(b.v_out_size(), 1u);
  EXPECT_EQ(b.out_side[1].v, 1u);
  EXPECT_EQ(b.out_side[1].dist, Q(-4));
  EXPECT_EQ(b.v_in_size(), 0u);
  EXPECT_EQ(check_bidi(fg, b), "");
}

TEST(BidiTest, IsolatedSourceGivesInfiniteDelta) {
  FrozenGraph<Q> fg = freeze(make_graph(2, {{0, 1, -1}}));
  BidiResult<Q> b = bidi_dijkstra(fg, 0);
  EXPECT_TRUE(b.delta.is_inf());
  EXPECT_EQ(b.v_out_size(), 0u);
  EXPECT_EQ(b.v_in_size(), 0u);
  EXPECT_EQ(check_bidi(fg, b), "");
}

// Expected values confirmed by the brute-force condition check.
TEST(BidiTest, ImmediateStopAtZeroSum) {
  // r = 0, a = 1, b = 2.
  FrozenGraph<Q> fg = freeze(make_graph(3, {{0, 2, -2}, {1, 0, 2}}));
  BidiResult<Q> b = bidi_dijkstra(fg, 0);
  EXPECT_EQ(b.delta, Q(2));
  EXPECT_EQ(b.v_out_size(), 0u);
  EXPECT_EQ(b.v_in_size(), 0u);
  EXPECT_EQ(check_bidi(fg, b), "");
}

TEST(BidiTest, PostconditionsOnRandomSplitGraphs) {
  BidiWorkspace ws;
  std::size_t checked = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Graph<Q> g = seed % 2 ? testing::random_graph<Q>(seed, 14, 50, -8, 10)
                          : gen_potential_shifted<Q>(14, 50, 0.3, 12, seed);
    FrozenGraph<Q> fg = split_negative_vertices(freeze(g)).graph;
    for (VertexId r : fg.negative_vertices()) {
      BidiResult<Q> b = bidi_dijkstra(fg, r, &ws);
      EXPECT_EQ(check_bidi(fg, b), "") << "seed " << seed << " r " << r;
      ++checked;
    }
  }
  EXPECT_GT(checked, 200u);
}

TEST(BidiTest, WorkspaceReuseMatchesFreshRuns) {
  FrozenGraph<Q> fg = split_negative_vertices(
                          freeze(gen_potential_shifted<Q>(20, 80, 0.3, 10, 3)))
                          .graph;
  BidiWorkspace ws;
  for (VertexId r : fg.negative_vertices()) {
    BidiResult<Q> a = bidi_dijkstra(fg, r, &ws);
    BidiResult<Q> b = bidi_dijkstra(fg, r);
    EXPECT_EQ(a.delta, b.delta);
    ASSERT_EQ(a.out_side.size(), b.out_side.size());
    ASSERT_EQ(a.in_side.size(), b.in_side.size());
    for (std::size_t i = 0; i < a.out_side.size(); ++i) {
      EXPECT_EQ(a.out_side[i].v, b.out_side[i].v);
    }
  }
}

// The measured work stays within the quadratic-plus-log budget.
TEST(BidiTest, WorkWithinBudget) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    FrozenGraph<Q> fg = split_negative_vertices(
                            freeze(gen_potential_shifted<Q>(40, 200, 0.2, 20, seed)))
                            .graph;
    const double logn = std::log2(static_cast<double>(fg.num_vertices()));
    for (VertexId r : fg.negative_vertices()) {
      BidiResult<Q> b = bidi_dijkstra(fg, r);
      const double s = static_cast<double>(b.v_out_size() + b.v_in_size() + 2);
      EXPECT_LE(static_cast<double>(b.stats.edges_examined), s * s + 4 * s * logn);
      EXPECT_LE(static_cast<double>(b.stats.heap_ops), 4 * s * (logn + 1));
    }
  }
}

}  // namespace
}  // namespace negsssp
