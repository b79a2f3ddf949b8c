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

#include "cli_app.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "negsssp/cycles.hpp"
#include "negsssp/driver.hpp"
#include "negsssp/errors.hpp"
#include "negsssp/generators.hpp"
#include "negsssp/hop_sssp.hpp"
#include "negsssp/io.hpp"
#include "negsssp/report.hpp"

namespace negsssp::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string mode = "rational";
  std::optional<std::uint64_t> seed;
  double c = 4.0;
  std::optional<double> base_threshold;
};

struct SolveArgs {
  std::string graph;
  std::string source = "0";
  std::string algo = "shortcut";
  bool json = false;
  bool timings = false;
};

struct VerifyArgs {
  std::string graph;
  std::string source = "0";
};

struct BenchArgs {
  std::string gen = "n=200,m=800,negfrac=0.05,seeds=3";
  std::string algos = "bellman-ford,hybrid,shortcut";
  bool json = false;
};

struct GenArgs {
  std::string kind;
  std::vector<std::string> params;
  std::string out;
};

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw UsageError("bad " + what + ": '" + s + "'");
  }
  return v;
}

std::int64_t parse_i64(const std::string& s, const std::string& what) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw UsageError("bad " + what + ": '" + s + "'");
  }
  return v;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("bad " + what + ": '" + s + "'");
}

std::uint64_t resolve_seed(const Common& c) {
  if (c.seed) return *c.seed;
  if (const char* env = std::getenv("NEGSSSP_SEED")) {
    return parse_u64(env, "NEGSSSP_SEED");
  }
  return 0;
}

SolverConfig solver_config(const Common& c) {
  if (!(c.c >= 1)) throw UsageError("--c must be >= 1");
  SolverConfig cfg;
  cfg.C = c.c;
  cfg.seed = resolve_seed(c);
  cfg.base_threshold = c.base_threshold;
  return cfg;
}

// "k=v,k=v" or separate "k=v" tokens.
std::map<std::string, std::string> parse_params(
    const std::vector<std::string>& tokens) {
  std::map<std::string, std::string> out;
  for (const std::string& tok : tokens) {
    std::stringstream ss(tok);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw UsageError("expected key=value, got '" + item + "'");
      }
      out[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  return out;
}

void reject_unknown(const std::map<std::string, std::string>& p,
                    std::initializer_list<const char*> known) {
  for (const auto& [k, v] : p) {
    bool ok = false;
    for (const char* name : known) ok |= k == name;
    if (!ok) throw UsageError("unknown parameter '" + k + "'");
  }
}

template <class W>
Graph<W> load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph file '" + path + "'");
  return parse_graph<W>(in);
}

Source parse_source(const std::string& s, std::size_t n) {
  if (s == "super") return SuperSource{};
  std::uint64_t v = parse_u64(s, "source");
  if (v >= n) throw UsageError("source " + s + " out of range");
  return static_cast<VertexId>(v);
}

long long source_number(const Source& s) {
  if (std::holds_alternative<SuperSource>(s)) return -1;
  return std::get<VertexId>(s);
}

// Hop-limited search with h = number of negative vertices: every simple path
// has at most that many frozen edges.
template <class W>
SsspOutcome<W> hybrid(const Graph<W>& g, const Source& src) {
  FrozenGraph<W> fg = freeze(g);
  return finish_with_hops(fg, source_labels<W>(g.num_vertices(), src), fg.k());
}

template <class W>
struct AlgoRun {
  SsspOutcome<W> outcome;
  RunTrace trace;
  double seconds = 0;
};

template <class W>
AlgoRun<W> run_algo(const std::string& algo, const Graph<W>& g,
                    const Source& src, const SolverConfig& cfg) {
  AlgoRun<W> r;
  auto t0 = std::chrono::steady_clock::now();
  if (algo == "shortcut") {
    SolveResult<W> s = solve(g, src, cfg);
    r.outcome = std::move(s.outcome);
    r.trace = std::move(s.trace);
  } else if (algo == "bellman-ford") {
    r.outcome = bellman_ford(g, src);
  } else if (algo == "hybrid") {
    r.outcome = hybrid(g, src);
  } else {
    throw UsageError("unknown algorithm '" + algo + "'");
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
  return r;
}

template <class W>
int solve_cmd(const SolveArgs& a, const Common& c, std::ostream& out) {
  SolverConfig cfg = solver_config(c);
  cfg.collect_timings = a.timings;
  Graph<W> g = load_graph<W>(a.graph);
  Source src = parse_source(a.source, g.num_vertices());
  AlgoRun<W> r = run_algo(a.algo, g, src, cfg);
  if (a.json) {
    ReportOptions opts;
    opts.algorithm = a.algo;
    opts.mode = WeightTraits<W>::kName;
    opts.source = source_number(src);
    opts.timings = a.timings;
    out << render_json(g, r.outcome, &r.trace, opts) << '\n';
  } else {
    out << render_text(g, r.outcome);
  }
  return kExitOk;
}

template <class W>
bool same_value(const W& a, const W& b) {
  if constexpr (WeightTraits<W>::kExact) {
    return a == b;
  } else {
    if (std::isinf(a) || std::isinf(b)) return a == b;
    double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= 1e-6 * scale;
  }
}

template <class W>
bool valid_witness(const Graph<W>& g, const NegativeCycle& c) {
  return is_simple_cycle(g, c) && cycle_weight(g, c) < 0;
}

// Number of disagreeing vertices, or -1 if the outcomes differ in kind.
template <class W>
long compare_outcomes(const Graph<W>& g, const SsspOutcome<W>& got,
                      const SsspOutcome<W>& want, std::ostream& out) {
  if (got.has_cycle() || want.has_cycle()) {
    if (!got.has_cycle()) {
      out << "mismatch: reference found a negative cycle\n";
      return -1;
    }
    if (!valid_witness(g, *got.cycle)) {
      out << "mismatch: reported cycle is not a negative simple cycle\n";
      return -1;
    }
    if (!want.has_cycle() && !bellman_ford(g, Source{SuperSource{}}).has_cycle()) {
      out << "mismatch: cycle reported on a cycle-free graph\n";
      return -1;
    }
    return 0;
  }
  long bad = 0;
  for (std::size_t v = 0; v < want.dist.size(); ++v) {
    if (!same_value(got.dist[v], want.dist[v])) {
      if (bad < 10) {
        out << "mismatch: vertex " << v << " shortcut "
            << WeightTraits<W>::to_string(got.dist[v]) << " reference "
            << WeightTraits<W>::to_string(want.dist[v]) << '\n';
      }
      ++bad;
    }
  }
  return bad;
}

template <class W>
int verify_cmd(const VerifyArgs& a, const Common& c, std::ostream& out) {
  SolverConfig cfg = solver_config(c);
  cfg.collect_timings = false;
  Graph<W> g = load_graph<W>(a.graph);
  Source src = parse_source(a.source, g.num_vertices());
  SsspOutcome<W> got = solve(g, src, cfg).outcome;
  SsspOutcome<W> want = bellman_ford(g, src);
  long bad = compare_outcomes(g, got, want, out);
  if (bad != 0) {
    out << "verify: FAILED";
    if (bad > 0) out << " (" << bad << " vertices differ)";
    out << '\n';
    return kExitMismatch;
  }
  out << "verify: ok ("
      << (got.has_cycle() ? "negative cycle" : std::to_string(g.num_vertices()) +
                                                   " distances")
      << ", mode " << WeightTraits<W>::kName << ")\n";
  return kExitOk;
}

std::vector<std::uint64_t> parse_seeds(const std::string& s) {
  std::vector<std::uint64_t> out;
  auto dash = s.find('-');
  if (dash != std::string::npos) {
    std::uint64_t lo = parse_u64(s.substr(0, dash), "seeds");
    std::uint64_t hi = parse_u64(s.substr(dash + 1), "seeds");
    if (hi < lo) throw UsageError("empty seed range '" + s + "'");
    for (std::uint64_t x = lo; x <= hi; ++x) out.push_back(x);
  } else {
    std::uint64_t cnt = parse_u64(s, "seeds");
    for (std::uint64_t x = 1; x <= cnt; ++x) out.push_back(x);
  }
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <class W>
int bench_cmd(const BenchArgs& a, const Common& c, std::ostream& out) {
  auto p = parse_params({a.gen});
  reject_unknown(p, {"n", "m", "negfrac", "range", "seeds"});
  auto get = [&](const char* k, const char* def) {
    auto it = p.find(k);
    return it == p.end() ? std::string(def) : it->second;
  };
  const std::size_t n = parse_u64(get("n", "200"), "n");
  const std::size_t m = parse_u64(get("m", "800"), "m");
  const double negfrac = parse_double(get("negfrac", "0.05"), "negfrac");
  const std::int64_t range = parse_i64(get("range", "100"), "range");
  const std::vector<std::uint64_t> seeds = parse_seeds(get("seeds", "3"));
  const std::vector<std::string> algos = split_list(a.algos);
  SolverConfig cfg = solver_config(c);

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (!a.json) {
    out << std::left << std::setw(13) << "algo" << std::setw(7) << "seed"
        << std::setw(7) << "n" << std::setw(7) << "m" << std::setw(5) << "k"
        << std::setw(12) << "ms" << std::setw(6) << "iter" << std::setw(6)
        << "depth" << std::setw(9) << "added" << "status\n";
  }
  int rc = kExitOk;
  for (std::uint64_t seed : seeds) {
    Graph<W> g = gen_potential_shifted<W>(n, m, negfrac, range, seed);
    const std::size_t k = freeze(g).k();
    cfg.seed = seed;
    std::optional<SsspOutcome<W>> reference;
    for (const std::string& algo : algos) {
      AlgoRun<W> r = run_algo(algo, g, Source{VertexId{0}}, cfg);
      std::size_t added = 0;
      for (const IterationRecord& it : r.trace.iterations) {
        added += it.split_edges;
        for (std::size_t x : it.shortcut_edges) added += x;
      }
      std::string status = r.outcome.has_cycle() ? "cycle" : "ok";
      if (!reference) {
        reference = r.outcome;
      } else {
        std::ostringstream sink;
        if (compare_outcomes(g, r.outcome, *reference, sink) != 0) {
          status = "MISMATCH";
          rc = kExitMismatch;
        }
      }
      const std::size_t iters =
          r.trace.instances.empty() ? 0 : r.trace.instances.front().iterations;
      if (a.json) {
        rows.push_back({{"algo", algo},
                        {"seed", seed},
                        {"n", n},
                        {"m", g.num_edges()},
                        {"k", k},
                        {"seconds", r.seconds},
                        {"iterations", iters},
                        {"max_depth", r.trace.max_depth()},
                        {"edges_added", added},
                        {"status", status}});
      } else {
        std::ostringstream ms;
        ms << std::fixed << std::setprecision(3) << r.seconds * 1e3;
        out << std::left << std::setw(13) << algo << std::setw(7) << seed
            << std::setw(7) << n << std::setw(7) << g.num_edges()
            << std::setw(5) << k << std::setw(12) << ms.str() << std::setw(6)
            << iters << std::setw(6) << r.trace.max_depth() << std::setw(9)
            << added << status << '\n';
      }
    }
  }
  if (a.json) {
    nlohmann::ordered_json doc{{"schema", kReportSchema},
                               {"mode", WeightTraits<W>::kName},
                               {"rows", rows}};
    out << doc.dump(2) << '\n';
  }
  return rc;
}

int gen_cmd(const GenArgs& a, const Common& c, std::ostream& out) {
  auto p = parse_params(a.params);
  auto get = [&](const char* k, const std::string& def) {
    auto it = p.find(k);
    return it == p.end() ? def : it->second;
  };
  const std::string seed_def = std::to_string(resolve_seed(c));
  Graph<Rational> g;
  std::string comment;
  if (a.kind == "shifted") {
    reject_unknown(p, {"n", "m", "negfrac", "range", "seed"});
    g = gen_potential_shifted<Rational>(
        parse_u64(get("n", "50"), "n"), parse_u64(get("m", "200"), "m"),
        parse_double(get("negfrac", "0.1"), "negfrac"),
        parse_i64(get("range", "100"), "range"),
        parse_u64(get("seed", seed_def), "seed"));
    comment = "shifted graph";
  } else if (a.kind == "cycle") {
    reject_unknown(p, {"n", "m", "len", "weight", "seed"});
    PlantedCycle<Rational> pc = gen_planted_cycle<Rational>(
        parse_u64(get("n", "50"), "n"), parse_u64(get("m", "200"), "m"),
        parse_u64(get("len", "4"), "len"),
        parse_i64(get("weight", "-1"), "weight"),
        parse_u64(get("seed", seed_def), "seed"));
    g = std::move(pc.graph);
    std::ostringstream cs;
    cs << "planted cycle edges";
    for (EdgeId e : pc.cycle_edges) cs << ' ' << e;
    comment = cs.str();
  } else if (a.kind == "gadget") {
    reject_unknown(p, {"case"});
    ShortcutGadget<Rational> gd = gen_shortcut_gadget<Rational>(
        static_cast<int>(parse_i64(get("case", "1"), "case")));
    g = std::move(gd.graph);
    comment = "gadget case " + std::to_string(gd.which) + ": " + gd.description;
  } else {
    throw UsageError("unknown --kind '" + a.kind + "'");
  }
  if (a.out.empty() || a.out == "-") {
    write_graph(out, g, comment);
  } else {
    std::ofstream f(a.out);
    if (!f) throw UsageError("cannot write '" + a.out + "'");
    write_graph(f, g, comment);
  }
  return kExitOk;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--mode", c.mode, "Arithmetic: float or rational")
      ->check(CLI::IsMember({"float", "rational"}));
  sub->add_option("--seed", c.seed,
                  "Random seed (falls back to NEGSSSP_SEED, then 0)");
  sub->add_option("--c", c.c, "Constant C in the base-case threshold");
  sub->add_option("--base-threshold", c.base_threshold,
                  "Override the base-case threshold on k");
}

template <class F>
int dispatch_mode(const Common& c, F&& f) {
  if (c.mode == "float") return f(double{});
  return f(Rational{});
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Shortest paths with negative edge weights", "negsssp"};
  app.require_subcommand(1);

  Common common;
  SolveArgs sa;
  VerifyArgs va;
  BenchArgs ba;
  GenArgs ga;

  CLI::App* solve_sub = app.add_subcommand("solve", "Solve one instance");
  solve_sub->add_option("--graph", sa.graph, "Graph file")->required();
  solve_sub->add_option("--source", sa.source, "Source vertex or 'super'");
  solve_sub->add_option("--algo", sa.algo, "shortcut, bellman-ford or hybrid")
      ->check(CLI::IsMember({"shortcut", "bellman-ford", "hybrid"}));
  solve_sub->add_flag("--json", sa.json, "Write a JSON report");
  solve_sub->add_flag("--timings", sa.timings, "Include phase timings");
  add_common(solve_sub, common);

  CLI::App* verify_sub =
      app.add_subcommand("verify", "Compare the solver against Bellman-Ford");
  verify_sub->add_option("--graph", va.graph, "Graph file")->required();
  verify_sub->add_option("--source", va.source, "Source vertex or 'super'");
  add_common(verify_sub, common);

  CLI::App* bench_sub =
      app.add_subcommand("bench", "Time all algorithms on generated graphs");
  bench_sub->add_option("--gen", ba.gen,
                        "n=..,m=..,negfrac=..,range=..,seeds=N|A-B");
  bench_sub->add_option("--algos", ba.algos, "Comma-separated algorithms");
  bench_sub->add_flag("--json", ba.json, "Write JSON rows");
  add_common(bench_sub, common);

  CLI::App* gen_sub = app.add_subcommand("gen", "Write a generated graph");
  gen_sub->add_option("--kind", ga.kind, "shifted, cycle or gadget")
      ->required()
      ->check(CLI::IsMember({"shifted", "cycle", "gadget"}));
  gen_sub->add_option("params", ga.params, "key=value parameters");
  gen_sub->add_option("--out", ga.out, "Output file (default stdout)");
  add_common(gen_sub, common);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "negsssp: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (solve_sub->parsed()) {
      return dispatch_mode(common, [&](auto w) {
        return solve_cmd<decltype(w)>(sa, common, out);
      });
    }
    if (verify_sub->parsed()) {
      return dispatch_mode(common, [&](auto w) {
        return verify_cmd<decltype(w)>(va, common, out);
      });
    }
    if (bench_sub->parsed()) {
      return dispatch_mode(common, [&](auto w) {
        return bench_cmd<decltype(w)>(ba, common, out);
      });
    }
    return gen_cmd(ga, common, out);
  } catch (const UsageError& e) {
    err << "negsssp: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "negsssp: parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CountError& e) {
    err << "negsssp: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphError& e) {
    err << "negsssp: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "negsssp: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "negsssp: internal error: " << e.what() << '\n';
    if (!e.detail().empty()) err << e.detail() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "negsssp: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace negsssp::cli
