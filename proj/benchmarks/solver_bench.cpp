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


#include <benchmark/benchmark.h>

#include "negsssp/bidi_dijkstra.hpp"
#include "negsssp/driver.hpp"
#include "negsssp/generators.hpp"
#include "negsssp/hop_sssp.hpp"
#include "negsssp/neg_transform.hpp"
#include "negsssp/rational.hpp"
#include "negsssp/shortcutter.hpp"

namespace negsssp {
namespace {

template <class W>
Graph<W> bench_graph(const benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  return gen_potential_shifted<W>(n, 4 * n, 0.05, 100, 42);
}

// Small threshold so the shortcut loop runs at these sizes.
SolverConfig iterating_config() {
  SolverConfig cfg;
  cfg.sample_multiplier = 1;
  cfg.base_threshold = 8;
  return cfg;
}

template <class W>
void BM_BellmanFord(benchmark::State& state) {
  Graph<W> g = bench_graph<W>(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bellman_ford(g, Source{VertexId{0}}));
  }
}

template <class W>
void BM_HopFinish(benchmark::State& state) {
  Graph<W> g = bench_graph<W>(state);
  FrozenGraph<W> fg = freeze(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        finish_with_hops(fg, source_labels<W>(g.num_vertices(), Source{VertexId{0}}), fg.k()));
  }
}

template <class W>
void BM_SolveDefault(benchmark::State& state) {
  Graph<W> g = bench_graph<W>(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(g, Source{VertexId{0}}));
  }
}

template <class W>
void BM_SolveIterating(benchmark::State& state) {
  Graph<W> g = bench_graph<W>(state);
  const SolverConfig cfg = iterating_config();
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(g, Source{VertexId{0}}, cfg));
  }
}

template <class W>
void BM_ShortcutStep(benchmark::State& state) {
  Graph<W> g = bench_graph<W>(state);
  FrozenGraph<W> fg = split_negative_vertices(freeze(g)).graph;
  std::vector<BidiResult<W>> bidi = bidi_all(fg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(shortcut_step(fg, bidi));
  }
}

template <class W>
void BM_BidiAll(benchmark::State& state) {
  Graph<W> g = bench_graph<W>(state);
  FrozenGraph<W> fg = split_negative_vertices(freeze(g)).graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bidi_all(fg));
  }
}

BENCHMARK_TEMPLATE(BM_BellmanFord, double)->RangeMultiplier(2)->Range(64, 512);
BENCHMARK_TEMPLATE(BM_BellmanFord, Rational)->RangeMultiplier(2)->Range(64, 256);
BENCHMARK_TEMPLATE(BM_HopFinish, double)->RangeMultiplier(2)->Range(64, 512);
BENCHMARK_TEMPLATE(BM_SolveDefault, double)->RangeMultiplier(2)->Range(64, 512);
BENCHMARK_TEMPLATE(BM_SolveIterating, double)->RangeMultiplier(2)->Range(64, 256);
BENCHMARK_TEMPLATE(BM_SolveIterating, Rational)->Arg(64)->Arg(128);
BENCHMARK_TEMPLATE(BM_BidiAll, double)->RangeMultiplier(2)->Range(64, 512);
BENCHMARK_TEMPLATE(BM_ShortcutStep, double)->RangeMultiplier(2)->Range(64, 256);

}  // namespace
}  // namespace negsssp

BENCHMARK_MAIN();
