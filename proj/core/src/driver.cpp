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

#include "negsssp/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <utility>
#include <variant>

#include "negsssp/betweenness.hpp"
#include "negsssp/bidi_dijkstra.hpp"
#include "negsssp/errors.hpp"
#include "negsssp/lineage.hpp"
#include "negsssp/neg_transform.hpp"
#include "negsssp/report.hpp"
#include "negsssp/rng.hpp"
#include "negsssp/shortcutter.hpp"

namespace negsssp {

double base_case_threshold(const SolverConfig& cfg, std::size_t n) {
  if (cfg.base_threshold) return *cfg.base_threshold;
  const double ln_n = std::log(static_cast<double>(std::max<std::size_t>(n, 2)));
  return 4.0 * cfg.C * cfg.C * cfg.C * ln_n * ln_n * ln_n;
}

namespace {

class PhaseTimer {
 public:
  PhaseTimer(RunTrace& trace, const char* phase, bool on)
      : trace_(trace), phase_(phase), on_(on),
        start_(std::chrono::steady_clock::now()) {}
  ~PhaseTimer() {
    if (!on_) return;
    std::chrono::duration<double> d = std::chrono::steady_clock::now() - start_;
    trace_.phase_seconds[phase_] += d.count();
  }

 private:
  RunTrace& trace_;
  const char* phase_;
  bool on_;
  std::chrono::steady_clock::time_point start_;
};

template <class W>
struct Preprocessed {
  FrozenGraph<W> fg;
  EdgeLineage lineage;
  std::size_t hops = 0;
  int instance = 0;
};

template <class W>
std::size_t count_negative_sources(const Graph<W>& g) {
  std::vector<char> neg(g.num_vertices(), 0);
  for (const Edge<W>& e : g.edges()) {
    if (e.weight < 0) neg[e.src] = 1;
  }
  return static_cast<std::size_t>(std::count(neg.begin(), neg.end(), 1));
}

template <class W>
class Run {
 public:
  explicit Run(const SolverConfig& cfg) : cfg_(cfg) {
    if (cfg_.C < 1.0) throw PreconditionError("solver constant C must be >= 1");
  }

  RunTrace& trace() { return trace_; }

  std::variant<Preprocessed<W>, NegativeCycle> preprocess(const Graph<W>& g,
                                                          int parent, int depth,
                                                          bool forced);

  SsspOutcome<W> finish(const Preprocessed<W>& pre, const Graph<W>& g,
                        const Source& source);

 private:
  SsspOutcome<W> solve_child(const Graph<W>& h, int parent, int depth,
                             std::size_t parent_k) {
    // A child that would not shrink is solved directly to keep the recursion
    // finite.
    const bool forced = count_negative_sources(h) >= parent_k;
    auto pre = preprocess(h, parent, depth, forced);
    last_child_ = std::visit(
        [](const auto& p) {
          if constexpr (std::is_same_v<std::decay_t<decltype(p)>,
                                       NegativeCycle>) {
            return -1;
          } else {
            return p.instance;
          }
        },
        pre);
    if (auto* c = std::get_if<NegativeCycle>(&pre)) {
      SsspOutcome<W> out;
      out.cycle = std::move(*c);
      return out;
    }
    return finish(std::get<Preprocessed<W>>(pre), h, Source{SuperSource{}});
  }

  const SolverConfig& cfg_;
  RunTrace trace_;
  int last_child_ = -1;
};

template <class W>
std::variant<Preprocessed<W>, NegativeCycle> Run<W>::preprocess(
    const Graph<W>& g, int parent, int depth, bool forced) {
  const int id = static_cast<int>(trace_.instances.size());
  const double thr = base_case_threshold(cfg_, g.num_vertices());
  const bool timed = cfg_.collect_timings;

  FrozenGraph<W> fg = freeze(g);
  {
    InstanceRecord rec;
    rec.id = id;
    rec.parent = parent;
    rec.depth = depth;
    rec.n = g.num_vertices();
    rec.m = g.num_edges();
    rec.k = fg.k();
    rec.threshold = thr;
    rec.forced_base = forced;
    trace_.instances.push_back(rec);
  }

  EdgeLineage lineage(g.num_edges());
  std::size_t h = fg.k();
  std::size_t iters = 0;
  std::size_t hops = 0;
  while (true) {
    const std::size_t k = fg.k();
    h = std::min(h, k);
    if (forced || static_cast<double>(k) <= thr) {
      hops = h;
      break;
    }
    if (h <= 2) {
      hops = 2;
      break;
    }
    if (iters >= cfg_.max_iterations) {
      throw InternalError("iteration limit " +
                              std::to_string(cfg_.max_iterations) + " exceeded",
                          trace_to_json(trace_, false));
    }
    ++iters;

    IterationRecord it;
    it.instance = id;
    it.iter = iters;
    it.k = k;
    it.h_before = h;
    it.vertices_before = fg.num_vertices();
    it.edges_before = fg.num_edges();

    SplitResult<W> sp;
    {
      PhaseTimer t(trace_, "split", timed);
      sp = split_negative_vertices(fg);
    }
    for (const SplitVertex& s : sp.mapping) lineage.add(s.link, {});
    it.split_edges = sp.mapping.size();

    BetweennessConfig bc;
    bc.b = static_cast<double>(k) / std::max(thr, 1.0);
    bc.sample_multiplier = cfg_.sample_multiplier;
    bc.seed = derive_seed({cfg_.seed, static_cast<std::uint64_t>(id),
                           static_cast<std::uint64_t>(iters)});
    it.b = bc.b;
    BetweennessResult<W> br;
    {
      PhaseTimer t(trace_, "betweenness", timed);
      last_child_ = -1;
      SuperSourceOracle<W> oracle = [&](const Graph<W>& hg) {
        return solve_child(hg, id, depth + 1, k);
      };
      br = reduce_betweenness(sp.graph, bc, oracle);
    }
    it.sample = br.sample.size();
    it.child_k = br.child_k;
    it.child_instance = last_child_;
    if (br.cycle) {
      trace_.iterations.push_back(it);
      trace_.instances[id].iterations = iters;
      return lift_cycle(g, lineage, br.cycle->edges);
    }

    FrozenGraph<W> rw = apply_potential(sp.graph, br.phi);
    std::vector<BidiResult<W>> bidi;
    {
      PhaseTimer t(trace_, "bidi", timed);
      bidi = bidi_all(rw);
    }
    for (const BidiResult<W>& b : bidi) {
      it.bidi_edges_examined += b.stats.edges_examined;
      it.bidi_heap_ops += b.stats.heap_ops;
    }
    ShortcutResult<W> sc;
    {
      PhaseTimer t(trace_, "shortcut", timed);
      sc = shortcut_step(rw, bidi);
    }
    for (std::size_t i = 0; i < sc.lineage.size(); ++i) {
      lineage.add(static_cast<EdgeId>(rw.num_edges() + i),
                  std::move(sc.lineage[i]));
    }
    fg = unfreeze(sc.graph);
    h -= h / 3;

    it.shortcut_edges = sc.report.edges_added;
    it.sum_sq = sc.report.sum_sq;
    it.sum_lin = sc.report.sum_lin;
    it.h_after = h;
    it.k_after = fg.k();
    it.vertices_after = fg.num_vertices();
    it.edges_after = fg.num_edges();
    trace_.iterations.push_back(it);
  }

  InstanceRecord& rec = trace_.instances[id];
  rec.iterations = iters;
  rec.finish_hops = hops;
  rec.final_vertices = fg.num_vertices();
  rec.final_edges = fg.num_edges();
  return Preprocessed<W>{std::move(fg), std::move(lineage), hops, id};
}

template <class W>
SsspOutcome<W> Run<W>::finish(const Preprocessed<W>& pre, const Graph<W>& g,
                              const Source& source) {
  PhaseTimer t(trace_, "finish", cfg_.collect_timings);
  const std::size_t n0 = g.num_vertices();
  const std::vector<W>& phi = pre.fg.cumulative_phi();
  const std::vector<W> base = source_labels<W>(n0, source);
  // Labels live in reweighted space: an original label l at v becomes
  // l - phi(v).
  std::vector<W> seeds(pre.fg.num_vertices(), WeightTraits<W>::inf());
  for (std::size_t v = 0; v < n0; ++v) {
    if (!WeightTraits<W>::is_inf(base[v])) seeds[v] = base[v] - phi[v];
  }
  SsspOutcome<W> r = finish_with_hops(pre.fg, std::move(seeds), pre.hops);
  SsspOutcome<W> out;
  if (r.has_cycle()) {
    out.cycle = lift_cycle(g, pre.lineage, r.cycle->edges);
    return out;
  }
  out.dist.resize(n0);
  for (std::size_t v = 0; v < n0; ++v) {
    out.dist[v] = WeightTraits<W>::is_inf(r.dist[v]) ? WeightTraits<W>::inf()
                                                     : r.dist[v] + phi[v];
  }
  return out;
}

}  // namespace

template <class W>
SolveResult<W> solve(const Graph<W>& g, const Source& source,
                     const SolverConfig& cfg) {
  MultiSolveResult<W> m = solve_multi_source(g, {source}, cfg);
  return SolveResult<W>{std::move(m.outcomes.front()), std::move(m.trace)};
}

template <class W>
MultiSolveResult<W> solve_multi_source(const Graph<W>& g,
                                       const std::vector<Source>& sources,
                                       const SolverConfig& cfg) {
  for (const Source& s : sources) {
    if (const VertexId* v = std::get_if<VertexId>(&s);
        v != nullptr && *v >= g.num_vertices()) {
      throw PreconditionError("source " + std::to_string(*v) + " out of range");
    }
  }
  MultiSolveResult<W> res;
  if (sources.empty()) return res;
  Run<W> run(cfg);
  auto pre = run.preprocess(g, -1, 0, false);
  if (auto* c = std::get_if<NegativeCycle>(&pre)) {
    for (std::size_t i = 0; i < sources.size(); ++i) {
      SsspOutcome<W> o;
      o.cycle = *c;
      res.outcomes.push_back(std::move(o));
    }
  } else {
    for (const Source& s : sources) {
      res.outcomes.push_back(
          run.finish(std::get<Preprocessed<W>>(pre), g, s));
    }
  }
  res.trace = std::move(run.trace());
  return res;
}

#define NEGSSSP_INSTANTIATE(W)                                             \
  template SolveResult<W> solve(const Graph<W>&, const Source&,            \
                                const SolverConfig&);                      \
  template MultiSolveResult<W> solve_multi_source(                         \
      const Graph<W>&, const std::vector<Source>&, const SolverConfig&);

NEGSSSP_INSTANTIATE(double)
NEGSSSP_INSTANTIATE(Rational)

}  // namespace negsssp
