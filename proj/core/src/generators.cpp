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

#include "negsssp/generators.hpp"

#include <cmath>
#include <tuple>

#include "negsssp/errors.hpp"
#include "negsssp/rng.hpp"

namespace negsssp {
namespace {

constexpr int kPsiBits = 20;

struct RawEdge {
  VertexId src;
  VertexId dst;
  std::int64_t w;
};

std::int64_t psi(std::int64_t a, std::int64_t p) {
  // a < 2^20 and p <= 2^43, so the product fits.
  return (a * p) >> kPsiBits;
}

std::size_t count_negative(const std::vector<RawEdge>& es,
                           const std::vector<std::int64_t>& a, std::int64_t p) {
  std::size_t c = 0;
  for (const RawEdge& e : es) {
    if (e.w + psi(a[e.src], p) - psi(a[e.dst], p) < 0) ++c;
  }
  return c;
}

std::vector<RawEdge> shifted_raw(std::size_t n, std::size_t m,
                                 double neg_fraction, std::int64_t weight_range,
                                 std::uint64_t seed) {
  if (neg_fraction < 0 || neg_fraction > 1) {
    throw PreconditionError("neg_fraction must lie in [0, 1]");
  }
  if (weight_range < 0 || weight_range > (std::int64_t{1} << 30)) {
    throw PreconditionError("weight_range must lie in [0, 2^30]");
  }
  if (m > 0 && n < 2) throw PreconditionError("edges need at least 2 vertices");
  Rng rng(seed);
  std::vector<RawEdge> es;
  es.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    VertexId s = static_cast<VertexId>(rng.below(n));
    VertexId d = static_cast<VertexId>(rng.below(n - 1));
    if (d >= s) ++d;
    es.push_back({s, d, rng.between(0, weight_range)});
  }
  std::vector<std::int64_t> a(n);
  for (std::int64_t& x : a) {
    x = static_cast<std::int64_t>(rng.below(std::uint64_t{1} << kPsiBits));
  }

  const std::size_t target =
      static_cast<std::size_t>(std::llround(neg_fraction * static_cast<double>(m)));
  // Largest P in [0, hi] whose count stays within target.
  std::int64_t lo = 0;
  std::int64_t hi = (weight_range + 1) * 4096;
  if (count_negative(es, a, hi) <= target) {
    lo = hi;
  } else {
    while (hi - lo > 1) {
      std::int64_t mid = lo + (hi - lo) / 2;
      if (count_negative(es, a, mid) <= target) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  }
  for (RawEdge& e : es) e.w += psi(a[e.src], lo) - psi(a[e.dst], lo);
  return es;
}

template <class W>
std::vector<EdgeSpec<W>> to_specs(const std::vector<RawEdge>& es) {
  std::vector<EdgeSpec<W>> out;
  out.reserve(es.size());
  for (const RawEdge& e : es) {
    out.push_back({e.src, e.dst, WeightTraits<W>::from_int(e.w)});
  }
  return out;
}

}  // namespace

template <class W>
Graph<W> gen_potential_shifted(std::size_t n, std::size_t m,
                               double neg_fraction, std::int64_t weight_range,
                               std::uint64_t seed) {
  if (n == 0) throw PreconditionError("graph needs at least one vertex");
  return build_graph(n, to_specs<W>(shifted_raw(n, m, neg_fraction,
                                                weight_range, seed)));
}

template <class W>
PlantedCycle<W> gen_planted_cycle(std::size_t n, std::size_t m,
                                  std::size_t cycle_len,
                                  std::int64_t cycle_weight,
                                  std::uint64_t seed) {
  if (cycle_len < 2 || cycle_len > n) {
    throw PreconditionError("cycle_len must lie in [2, n]");
  }
  if (cycle_weight >= 0) throw PreconditionError("cycle_weight must be < 0");
  std::vector<RawEdge> es = shifted_raw(n, m, 0.2, 10, seed);
  Rng rng(derive_seed({seed, 0xc1c1e}));
  std::vector<std::uint32_t> cyc = rng.sample(static_cast<std::uint32_t>(n),
                                              static_cast<std::uint32_t>(cycle_len));
  PlantedCycle<W> out;
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < cycle_len; ++i) {
    std::int64_t w = i + 1 < cycle_len ? rng.between(-5, 5) : cycle_weight - sum;
    sum += w;
    out.cycle_edges.push_back(static_cast<EdgeId>(es.size()));
    es.push_back({cyc[i], cyc[(i + 1) % cycle_len], w});
  }
  bool zero_on_cycle = false;
  for (std::uint32_t v : cyc) zero_on_cycle |= v == 0;
  if (!zero_on_cycle) es.push_back({0, cyc[0], 0});
  out.graph = build_graph(n, to_specs<W>(es));
  return out;
}

template <class W>
ShortcutGadget<W> gen_shortcut_gadget(int which) {
  using T = std::tuple<VertexId, VertexId, std::int64_t>;
  auto w = [](std::int64_t x) { return WeightTraits<W>::from_int(x); };
  ShortcutGadget<W> gd;
  gd.which = which;
  std::vector<T> es;
  std::size_t n = 0;
  switch (which) {
    case 1:
      // d^0(u', r) = 1 is below the threshold 4: the shortcut is (u, r').
      n = 8;
      es = {{0, 1, 0}, {1, 2, -1}, {2, 3, 1}, {3, 4, -5},
            {4, 5, 1}, {5, 6, -1}, {6, 7, 0}};
      gd.s = 0, gd.t = 7;
      gd.u = 1, gd.u_prime = 2, gd.r = 3, gd.r_prime = 4, gd.v = 5,
      gd.v_prime = 6;
      gd.delta = w(4);
      gd.path_weight = w(-5);
      gd.segment_weight = w(-5);
      gd.expected = {{1, 4, false, false, w(-5)}};
      gd.description = "near in-side: edge (u, r') replaces u -> u' -> r -> r'";
      break;
    case 2:
      // d^-(r, v) = -10 is below -2: the shortcut is (r, v').
      n = 10;
      es = {{0, 1, 0},  {1, 2, -1}, {2, 3, 7}, {3, 4, -10}, {4, 5, 0},
            {5, 6, -1}, {6, 7, 0},  {8, 3, 1}, {9, 3, 2}};
      gd.s = 0, gd.t = 7;
      gd.u = 1, gd.u_prime = 2, gd.r = 3, gd.r_prime = 4, gd.v = 5,
      gd.v_prime = 6;
      gd.delta = w(2);
      gd.path_weight = w(-5);
      gd.segment_weight = w(-11);
      gd.expected = {{3, 6, false, false, w(-11)}};
      gd.description = "near out-side: edge (r, v') replaces r -> r' -> v -> v'";
      break;
    case 3:
      // Both sides are far: the path bypasses r through r~.
      n = 10;
      es = {{0, 1, 0}, {1, 2, -1}, {2, 3, 2},  {3, 4, 3}, {4, 5, -4},
            {5, 6, 1}, {6, 7, 2},  {7, 8, -1}, {8, 9, 0}};
      gd.s = 0, gd.t = 9;
      gd.u = 1, gd.u_prime = 2, gd.r = 4, gd.r_prime = 5, gd.v = 7,
      gd.v_prime = 8;
      gd.delta = w(3);
      gd.path_weight = w(2);
      gd.segment_weight = w(0);
      gd.expected = {{3, kNoVertex, true, false, w(0)},
                     {kNoVertex, 6, false, true, w(0)}};
      gd.description = "both far: u'' -> r~ -> v'' replaces u'' -> r -> r' -> v''";
      break;
    default:
      throw PreconditionError("gadget case must be 1, 2 or 3");
  }
  std::vector<EdgeSpec<W>> specs;
  for (const auto& [s, d, x] : es) specs.push_back({s, d, w(x)});
  gd.graph = build_graph(n, specs);
  return gd;
}

#define NEGSSSP_INSTANTIATE(W)                                                 \
  template Graph<W> gen_potential_shifted<W>(std::size_t, std::size_t, double, \
                                             std::int64_t, std::uint64_t);     \
  template PlantedCycle<W> gen_planted_cycle<W>(                               \
      std::size_t, std::size_t, std::size_t, std::int64_t, std::uint64_t);     \
  template ShortcutGadget<W> gen_shortcut_gadget<W>(int);

NEGSSSP_INSTANTIATE(double)
NEGSSSP_INSTANTIATE(Rational)

}  // namespace negsssp
