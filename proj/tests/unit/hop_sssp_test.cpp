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

#include "negsssp/cycles.hpp"
#include "negsssp/errors.hpp"
#include "negsssp/generators.hpp"
#include "negsssp/hop_sssp.hpp"
#include "test_support.hpp"

namespace negsssp {
namespace {

using testing::inf;
using testing::make_graph;
using testing::Q;

const EdgeFilter kAll = [](EdgeId) { return true; };

TEST(DijkstraTest, Examples) {
  Graph<Q> empty = make_graph(3, {});
  EXPECT_EQ(dijkstra(empty, 1, kAll), (std::vector<Q>{inf<Q>(), Q(0), inf<Q>()}));

  Graph<Q> chain = make_graph(3, {{0, 1, 2}, {1, 2, 3}});
  EXPECT_EQ(dijkstra(chain, 0, kAll), (std::vector<Q>{Q(0), Q(2), Q(5)}));

  Graph<Q> neg = make_graph(2, {{0, 1, -4}});
  EXPECT_EQ(dijkstra(neg, 0, kAll)[1], Q(-4));
}

TEST(DijkstraTest, NegativeEdgeAwayFromSourceThrows) {
  Graph<Q> g = make_graph(3, {{0, 1, 1}, {1, 2, -1}});
  EXPECT_THROW(dijkstra(g, 0, kAll), PreconditionError);
  // Filtered out, it is fine.
  EXPECT_NO_THROW(dijkstra(g, 0, [](EdgeId e) { return e != 1; }));
}

// Three-vertex example; the expected values were checked by enumerating all
// simple paths.
TEST(HopSsspTest, ThreeVertexHopProfile) {
  FrozenGraph<Q> fg = freeze(make_graph(3, {{0, 1, -1}, {1, 2, -1}, {0, 2, 0}}));
  std::vector<std::vector<Q>> prof = hop_sssp_profile(fg, Source{VertexId{0}}, 2);
  EXPECT_EQ(prof[0][2], Q(0));
  EXPECT_EQ(prof[1][2], Q(0));
  EXPECT_EQ(prof[2][2], Q(-2));
  for (std::size_t h = 0; h <= 2; ++h) {
    EXPECT_EQ(prof[h][2], testing::enumerate_simple_paths(fg, 0, 2, h));
  }
}

TEST(HopSsspTest, ZeroHopsAllFrozen) {
  FrozenGraph<Q> fg = freeze(make_graph(3, {{0, 1, -1}, {1, 2, -1}}));
  HopTable<Q> t = hop_sssp(fg, Source{VertexId{0}}, 0);
  EXPECT_EQ(t.dist, (std::vector<Q>{Q(0), inf<Q>(), inf<Q>()}));
}

// Property: hop_sssp equals the product-graph oracle for every h, is
// nonincreasing in h, and d^h(s,s) <= 0.
TEST(HopSsspTest, MatchesProductGraphOracle) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Graph<Q> g = testing::random_graph<Q>(seed, 9, 30, -6, 10);
    FrozenGraph<Q> fg = freeze(g);
    for (VertexId s = 0; s < 9; s += 4) {
      std::vector<std::vector<Q>> prof = hop_sssp_profile(fg, Source{s}, 4);
      for (std::size_t h = 0; h <= 4; ++h) {
        EXPECT_EQ(prof[h], testing::product_hop_distances(fg, s, h))
            << "seed " << seed << " s " << s << " h " << h;
        EXPECT_LE(prof[h][s], Q(0));
        if (h > 0) {
          for (VertexId v = 0; v < 9; ++v) EXPECT_LE(prof[h][v], prof[h - 1][v]);
        }
      }
    }
  }
}

TEST(HopSsspTest, SimplePathEnumerationAgreesWithoutCycles) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Graph<Q> g = gen_potential_shifted<Q>(7, 18, 0.3, 8, seed);
    FrozenGraph<Q> fg = freeze(g);
    for (VertexId s = 0; s < 7; ++s) {
      for (std::size_t h = 0; h <= 3; ++h) {
        HopTable<Q> t = hop_sssp(fg, Source{s}, h);
        for (VertexId v = 0; v < 7; ++v) {
          EXPECT_EQ(t.dist[v], testing::enumerate_simple_paths(fg, s, v, h));
        }
      }
    }
  }
}

TEST(HopSsspTest, HopSplitTriangleInequality) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    FrozenGraph<Q> fg = freeze(testing::random_graph<Q>(seed, 8, 28, -5, 9));
    std::vector<std::vector<std::vector<Q>>> prof;
    for (VertexId s = 0; s < 8; ++s) {
      prof.push_back(hop_sssp_profile(fg, Source{s}, 4));
    }
    for (VertexId s = 0; s < 8; ++s) {
      for (VertexId v = 0; v < 8; ++v) {
        for (VertexId t = 0; t < 8; ++t) {
          for (std::size_t h1 = 0; h1 <= 2; ++h1) {
            for (std::size_t h2 = 0; h2 <= 2; ++h2) {
              const Q& a = prof[s][h1][v];
              const Q& b = prof[v][h2][t];
              if (a.is_inf() || b.is_inf()) continue;
              EXPECT_LE(prof[s][h1 + h2][t], a + b);
            }
          }
        }
      }
    }
  }
}

TEST(HopSsspTest, ReweightingShiftsHopDistances) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph<Q> g = gen_potential_shifted<Q>(10, 40, 0.3, 10, seed);
    FrozenGraph<Q> fg = freeze(g);
    SsspOutcome<Q> bf = bellman_ford(g, Source{SuperSource{}});
    ASSERT_FALSE(bf.has_cycle());
    FrozenGraph<Q> rw = apply_potential(fg, bf.dist);
    for (VertexId s = 0; s < 10; ++s) {
      for (std::size_t h = 0; h <= 3; ++h) {
        HopTable<Q> a = hop_sssp(fg, Source{s}, h);
        HopTable<Q> b = hop_sssp(rw, Source{s}, h);
        for (VertexId t = 0; t < 10; ++t) {
          if (a.dist[t].is_inf()) {
            EXPECT_TRUE(b.dist[t].is_inf());
          } else {
            EXPECT_EQ(b.dist[t], a.dist[t] + bf.dist[s] - bf.dist[t]);
          }
        }
      }
    }
  }
}

TEST(HopSsspTest, FullHopsEqualBellmanFord) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph<Q> g = gen_potential_shifted<Q>(15, 50, 0.25, 20, seed);
    FrozenGraph<Q> fg = freeze(g);
    HopTable<Q> t = hop_sssp(fg, Source{VertexId{0}}, fg.num_frozen());
    EXPECT_EQ(t.dist, *testing::reference_distances(g, 0));
  }
}

TEST(BellmanFordTest, Examples) {
  SsspOutcome<Q> dag = bellman_ford(make_graph(3, {{0, 1, -2}, {1, 2, -3}}),
                                    Source{VertexId{0}});
  ASSERT_FALSE(dag.has_cycle());
  EXPECT_EQ(dag.dist, (std::vector<Q>{Q(0), Q(-2), Q(-5)}));

  Graph<Q> two = make_graph(2, {{0, 1, -2}, {1, 0, 1}});
  SsspOutcome<Q> c = bellman_ford(two, Source{VertexId{0}});
  ASSERT_TRUE(c.has_cycle());
  EXPECT_EQ(c.cycle->vertices.size(), 2u);
  EXPECT_EQ(cycle_weight(two, *c.cycle), Q(-1));
}

TEST(BellmanFordTest, PotentialMakesDijkstraAgree) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph<Q> g = gen_potential_shifted<Q>(20, 80, 0.2, 15, seed);
    SsspOutcome<Q> phi = bellman_ford(g, Source{SuperSource{}});
    ASSERT_FALSE(phi.has_cycle());
    FrozenGraph<Q> rw = unfreeze(apply_potential(freeze(g), phi.dist));
    EXPECT_EQ(rw.num_frozen(), 0u);
    SsspOutcome<Q> bf = bellman_ford(g, Source{VertexId{0}});
    std::vector<Q> dj = dijkstra(rw.graph(), 0, kAll);
    for (VertexId v = 0; v < 20; ++v) {
      if (bf.dist[v].is_inf()) {
        EXPECT_TRUE(dj[v].is_inf());
      } else {
        EXPECT_EQ(bf.dist[v], dj[v] - phi.dist[0] + phi.dist[v]);
      }
    }
  }
}

TEST(BellmanFordTest, CycleWitnessesAreNegativeAndSimple) {
  int cycles = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Graph<Q> g = testing::random_graph<Q>(seed, 10, 25, -6, 8);
    SsspOutcome<Q> r = bellman_ford(g, Source{SuperSource{}});
    EXPECT_EQ(r.has_cycle(), testing::has_negative_cycle(g)) << seed;
    if (r.has_cycle()) {
      ++cycles;
      EXPECT_TRUE(is_simple_cycle(g, *r.cycle));
      EXPECT_LT(cycle_weight(g, *r.cycle), Q(0));
    }
  }
  EXPECT_GT(cycles, 5);
}

TEST(DMinusTest, Examples) {
  FrozenGraph<Q> lone = freeze(make_graph(3, {{1, 0, 1}}));
  EXPECT_EQ(d_minus_from(lone, 0), (std::vector<Q>{Q(0), inf<Q>(), inf<Q>()}));

  FrozenGraph<Q> fg = freeze(make_graph(3, {{0, 1, -4}, {1, 2, 1}}));
  EXPECT_EQ(d_minus_from(fg, 0)[2], Q(-3));
}

TEST(DMinusTest, SandwichedBetweenZeroAndOneHop) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    FrozenGraph<Q> fg = freeze(testing::random_graph<Q>(seed, 10, 35, -5, 9));
    for (VertexId r = 0; r < 10; ++r) {
      std::vector<Q> dm = d_minus_from(fg, r);
      HopTable<Q> h0 = hop_sssp(fg, Source{r}, 0);
      HopTable<Q> h1 = hop_sssp(fg, Source{r}, 1);
      for (VertexId v = 0; v < 10; ++v) {
        EXPECT_LE(dm[v], h0.dist[v]);
        EXPECT_GE(dm[v], h1.dist[v]);
      }
    }
  }
}

TEST(DZeroTest, Examples) {
  FrozenGraph<Q> a = freeze(make_graph(2, {{1, 0, 1}}));
  EXPECT_EQ(d_zero_to(a, 0)[1], Q(1));
  FrozenGraph<Q> b = freeze(make_graph(2, {{1, 0, -1}}));
  EXPECT_TRUE(d_zero_to(b, 0)[1].is_inf());
}

TEST(DZeroTest, TransposeOfZeroHopSearch) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    FrozenGraph<Q> fg = freeze(testing::random_graph<Q>(seed, 10, 35, -5, 9));
    for (VertexId r = 0; r < 10; ++r) {
      std::vector<Q> to = d_zero_to(fg, r);
      for (VertexId v = 0; v < 10; ++v) {
        EXPECT_EQ(to[v], hop_sssp(fg, Source{v}, 0).dist[r]);
      }
    }
  }
}

TEST(TwoHopFinishTest, NoFrozenEdgesIsDijkstra) {
  Graph<Q> g = make_graph(3, {{0, 1, 2}, {1, 2, 3}, {0, 2, 9}});
  SsspOutcome<Q> r = two_hop_finish(freeze(g), Source{VertexId{0}});
  EXPECT_EQ(r.dist, dijkstra(g, 0, kAll));
}

TEST(TwoHopFinishTest, PlantedCycleDetected) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    PlantedCycle<Q> pc = gen_planted_cycle<Q>(12, 30, 3, -2, seed);
    FrozenGraph<Q> fg = freeze(pc.graph);
    // Enough hops that the sweep sees the cycle.
    SsspOutcome<Q> r = finish_with_hops(
        fg, source_labels<Q>(12, Source{VertexId{0}}), fg.k());
    ASSERT_TRUE(r.has_cycle()) << seed;
    EXPECT_LT(cycle_weight(pc.graph, *r.cycle), Q(0));
    EXPECT_TRUE(is_simple_cycle(pc.graph, *r.cycle));
  }
}

TEST(TwoHopFinishTest, ShiftedGraphsWithFewNegativeEdges) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph<Q> g = gen_potential_shifted<Q>(15, 50, 0.04, 20, seed);
    FrozenGraph<Q> fg = freeze(g);
    if (fg.num_frozen() > 2) continue;
    SsspOutcome<Q> r = two_hop_finish(fg, Source{VertexId{0}});
    ASSERT_FALSE(r.has_cycle());
    EXPECT_EQ(r.dist, *testing::reference_distances(g, 0));
  }
}

TEST(HopSsspTest, FloatModeMatchesRational) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph<Q> gq = gen_potential_shifted<Q>(20, 70, 0.2, 50, seed);
    Graph<double> gd = gen_potential_shifted<double>(20, 70, 0.2, 50, seed);
    HopTable<Q> a = hop_sssp(freeze(gq), Source{VertexId{0}}, 20);
    HopTable<double> b = hop_sssp(freeze(gd), Source{VertexId{0}}, 20);
    for (std::size_t v = 0; v < 20; ++v) {
      EXPECT_EQ(a.dist[v].to_double(), b.dist[v]);
    }
  }
}

}  // namespace
}  // namespace negsssp
