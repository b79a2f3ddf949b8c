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

#include "negsssp/cycles.hpp"
#include "negsssp/errors.hpp"
#include "negsssp/generators.hpp"
#include "negsssp/graph.hpp"
#include "test_support.hpp"

namespace negsssp {
namespace {

using testing::make_graph;
using testing::Q;

template <class W>
void expect_sorted_lists_ok(const Graph<W>& g, const std::vector<char>* mask) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto so = g.sorted_out_nonneg(v);
    std::size_t want = 0;
    for (EdgeId e : g.out_edges(v)) {
      want += !(g.edge(e).weight < 0) && !(mask && (*mask)[e]);
    }
    EXPECT_EQ(so.size(), want);
    for (std::size_t i = 0; i < so.size(); ++i) {
      EXPECT_EQ(g.edge(so[i]).src, v);
      EXPECT_FALSE(g.edge(so[i]).weight < 0);
      if (i > 0) EXPECT_FALSE(g.edge(so[i]).weight < g.edge(so[i - 1]).weight);
    }
    auto si = g.sorted_in_nonneg(v);
    for (std::size_t i = 1; i < si.size(); ++i) {
      EXPECT_FALSE(g.edge(si[i]).weight < g.edge(si[i - 1]).weight);
    }
  }
}

TEST(GraphTest, SingletonGraph) {
  Graph<Q> g = make_graph(1, {});
  EXPECT_EQ(g.num_vertices(), 1u);
  EXPECT_EQ(g.num_edges(), 0u);
  EXPECT_TRUE(g.out_edges(0).empty());
}

TEST(GraphTest, SortedListsSkipNegativeEdges) {
  Graph<Q> g = make_graph(3, {{0, 1, -2}, {1, 2, 3}, {0, 2, 5}});
  ASSERT_EQ(g.sorted_out_nonneg(0).size(), 1u);
  EXPECT_EQ(g.sorted_out_nonneg(0)[0], 2u);
  EXPECT_EQ(g.out_edges(0).size(), 2u);
}

TEST(GraphTest, ParallelEdgesKept) {
  Graph<Q> g = make_graph(2, {{0, 1, 1}, {0, 1, 1}});
  ASSERT_EQ(g.num_edges(), 2u);
  EXPECT_NE(g.edge(0).id, g.edge(1).id);
  EXPECT_EQ(g.in_edges(1).size(), 2u);
}

TEST(GraphTest, EndpointOutOfRangeThrows) {
  EXPECT_THROW(make_graph(2, {{0, 2, 1}}), GraphError);
}

TEST(GraphTest, AdjacencyMatchesEdgeList) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph<Q> g = testing::random_graph<Q>(seed, 12, 50, -5, 9);
    std::size_t out_total = 0, in_total = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      for (EdgeId e : g.out_edges(v)) EXPECT_EQ(g.edge(e).src, v);
      for (EdgeId e : g.in_edges(v)) EXPECT_EQ(g.edge(e).dst, v);
      out_total += g.out_edges(v).size();
      in_total += g.in_edges(v).size();
    }
    EXPECT_EQ(out_total, g.num_edges());
    EXPECT_EQ(in_total, g.num_edges());
    expect_sorted_lists_ok(g, nullptr);
  }
}

TEST(FreezeTest, Examples) {
  FrozenGraph<Q> a = freeze(make_graph(3, {{0, 1, 2}, {1, 2, 3}}));
  EXPECT_EQ(a.num_frozen(), 0u);
  EXPECT_TRUE(a.negative_vertices().empty());

  FrozenGraph<Q> b = freeze(make_graph(3, {{0, 1, -2}, {1, 2, 3}}));
  EXPECT_EQ(b.frozen_edges(), std::vector<EdgeId>{0});
  EXPECT_EQ(b.negative_vertices(), std::vector<VertexId>{0});

  FrozenGraph<Q> c = freeze(make_graph(3, {{0, 1, -2}, {0, 2, -1}}));
  EXPECT_EQ(c.negative_vertices(), std::vector<VertexId>{0});
  EXPECT_EQ(c.k(), 1u);
}

TEST(FreezeTest, UnfreezeOfFreshFreezeIsIdentity) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    FrozenGraph<Q> fg = freeze(testing::random_graph<Q>(seed, 10, 40, -5, 9));
    EXPECT_EQ(unfreeze(fg).frozen_mask(), fg.frozen_mask());
  }
}

TEST(FreezeTest, NegativeNonFrozenEdgeRejected) {
  Graph<Q> g = make_graph(2, {{0, 1, -1}});
  EXPECT_THROW(FrozenGraph<Q>(2, g.edges(), {0}, {Q(0), Q(0)}),
               PreconditionError);
}

TEST(ApplyPotentialTest, ZeroPotentialIsIdentity) {
  FrozenGraph<Q> fg = freeze(make_graph(3, {{0, 1, -2}, {1, 2, 3}}));
  FrozenGraph<Q> out = apply_potential(fg, {Q(0), Q(0), Q(0)});
  for (EdgeId e = 0; e < 2; ++e) {
    EXPECT_EQ(out.graph().edge(e).weight, fg.graph().edge(e).weight);
  }
}

TEST(ApplyPotentialTest, SingleEdgeFormula) {
  FrozenGraph<Q> fg = freeze(make_graph(2, {{0, 1, 4}}));
  FrozenGraph<Q> out = apply_potential(fg, {Q(3), Q(5)});
  EXPECT_EQ(out.graph().edge(0).weight, Q(2));
  EXPECT_EQ(out.cumulative_phi()[0], Q(3));
  FrozenGraph<Q> twice = apply_potential(out, {Q(1), Q(-1)});
  EXPECT_EQ(twice.graph().edge(0).weight, Q(4));
  EXPECT_EQ(twice.cumulative_phi()[1], Q(4));
}

TEST(ApplyPotentialTest, InvalidPotentialThrows) {
  FrozenGraph<Q> fg = freeze(make_graph(2, {{0, 1, 1}}));
  EXPECT_FALSE(is_valid_potential(fg, {Q(0), Q(2)}));
  EXPECT_THROW(apply_potential(fg, {Q(0), Q(2)}), PotentialError);
}

TEST(ApplyPotentialTest, FrozenEdgesStayOutOfSortedLists) {
  FrozenGraph<Q> fg = freeze(make_graph(2, {{0, 1, -1}, {0, 1, 3}}));
  FrozenGraph<Q> out = apply_potential(fg, {Q(5), Q(0)});
  EXPECT_EQ(out.graph().edge(0).weight, Q(4));
  EXPECT_TRUE(out.is_frozen(0));
  ASSERT_EQ(out.graph().sorted_out_nonneg(0).size(), 1u);
  EXPECT_EQ(out.graph().sorted_out_nonneg(0)[0], 1u);
  expect_sorted_lists_ok(out.graph(), &out.frozen_mask());

  FrozenGraph<Q> thawed = unfreeze(out);
  EXPECT_EQ(thawed.num_frozen(), 0u);
  EXPECT_EQ(thawed.graph().sorted_out_nonneg(0).size(), 2u);
  EXPECT_EQ(thawed.cumulative_phi(), out.cumulative_phi());
}

TEST(ApplyPotentialTest, StillNegativeEdgeStaysFrozen) {
  FrozenGraph<Q> fg = freeze(make_graph(2, {{0, 1, -5}}));
  FrozenGraph<Q> out = unfreeze(apply_potential(fg, {Q(1), Q(0)}));
  EXPECT_TRUE(out.is_frozen(0));
}

// Property: cycle weights are invariant and the valid-potential check agrees
// with edge-by-edge recomputation.
TEST(ApplyPotentialTest, CycleWeightInvariantUnderRandomPotentials) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph<Q> g = testing::random_graph<Q>(seed, 8, 30, -4, 6);
    FrozenGraph<Q> fg = freeze(g);
    Rng rng(seed * 7);
    std::vector<Q> phi;
    for (std::size_t v = 0; v < 8; ++v) phi.push_back(Q(rng.between(-3, 3)));
    bool valid = true;
    for (const Edge<Q>& e : g.edges()) {
      if (!fg.is_frozen(e.id) && e.weight + phi[e.src] - phi[e.dst] < 0) {
        valid = false;
      }
    }
    EXPECT_EQ(is_valid_potential(fg, phi), valid);
    if (!valid) continue;
    FrozenGraph<Q> out = apply_potential(fg, phi);
    for (VertexId v = 0; v < 8; ++v) {
      for (EdgeId e1 : g.out_edges(v)) {
        for (EdgeId e2 : g.out_edges(g.edge(e1).dst)) {
          if (g.edge(e2).dst != v) continue;
          NegativeCycle c{{v, g.edge(e1).dst}, {e1, e2}};
          EXPECT_EQ(cycle_weight(out.graph(), c), cycle_weight(g, c));
        }
      }
    }
  }
}

TEST(ApplyPotentialTest, FloatCycleWeightWithinRelativeTolerance) {
  Graph<double> g = gen_potential_shifted<double>(30, 120, 0.2, 1000, 9);
  FrozenGraph<double> fg = freeze(g);
  std::vector<double> phi(30);
  // Uniform shift keeps every edge weight.
  for (double& p : phi) p = 0.1;
  FrozenGraph<double> out = apply_potential(fg, phi);
  double max_abs = 0;
  for (const Edge<double>& e : g.edges()) max_abs = std::max(max_abs, std::fabs(e.weight));
  for (const Edge<double>& e : g.edges()) {
    EXPECT_NEAR(out.graph().edge(e.id).weight, e.weight, 0x1p-40 * max_abs);
  }
}

}  // namespace
}  // namespace negsssp
