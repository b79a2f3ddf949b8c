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

#include "negsssp/report.hpp"

#include <sstream>

#include "json.hpp"
#include "negsssp/cycles.hpp"
#include "negsssp/errors.hpp"

namespace negsssp {
namespace {

using Json = nlohmann::ordered_json;

Json instance_json(const InstanceRecord& r) {
  return Json{{"id", r.id},
              {"parent", r.parent},
              {"depth", r.depth},
              {"n", r.n},
              {"m", r.m},
              {"k", r.k},
              {"threshold", r.threshold},
              {"forced_base", r.forced_base},
              {"iterations", r.iterations},
              {"finish_hops", r.finish_hops},
              {"final_vertices", r.final_vertices},
              {"final_edges", r.final_edges}};
}

Json iteration_json(const IterationRecord& r) {
  Json steps = Json::array();
  for (std::size_t s = 1; s <= 5; ++s) steps.push_back(r.shortcut_edges[s]);
  return Json{{"instance", r.instance},
              {"iter", r.iter},
              {"k", r.k},
              {"b", r.b},
              {"sample", r.sample},
              {"child_k", r.child_k},
              {"child_instance", r.child_instance},
              {"vertices_before", r.vertices_before},
              {"edges_before", r.edges_before},
              {"vertices_after", r.vertices_after},
              {"edges_after", r.edges_after},
              {"split_edges", r.split_edges},
              {"shortcut_edges", steps},
              {"h_before", r.h_before},
              {"h_after", r.h_after},
              {"k_after", r.k_after},
              {"sum_sq", r.sum_sq},
              {"sum_lin", r.sum_lin},
              {"bidi_edges_examined", r.bidi_edges_examined},
              {"bidi_heap_ops", r.bidi_heap_ops}};
}

Json trace_json(const RunTrace& t, bool timings) {
  Json j;
  Json inst = Json::array();
  for (const InstanceRecord& r : t.instances) inst.push_back(instance_json(r));
  Json its = Json::array();
  for (const IterationRecord& r : t.iterations) its.push_back(iteration_json(r));
  j["iterations"] = its.size();
  j["max_depth"] = t.max_depth();
  j["instances"] = std::move(inst);
  j["rounds"] = std::move(its);
  if (timings) {
    Json ph = Json::object();
    for (const auto& [name, sec] : t.phase_seconds) ph[name] = sec;
    j["phase_seconds"] = std::move(ph);
  }
  return j;
}

RunTrace trace_from_json(const Json& j) {
  RunTrace t;
  for (const Json& r : j.at("instances")) {
    InstanceRecord x;
    x.id = r.at("id");
    x.parent = r.at("parent");
    x.depth = r.at("depth");
    x.n = r.at("n");
    x.m = r.at("m");
    x.k = r.at("k");
    x.threshold = r.at("threshold");
    x.forced_base = r.at("forced_base");
    x.iterations = r.at("iterations");
    x.finish_hops = r.at("finish_hops");
    x.final_vertices = r.at("final_vertices");
    x.final_edges = r.at("final_edges");
    t.instances.push_back(x);
  }
  for (const Json& r : j.at("rounds")) {
    IterationRecord x;
    x.instance = r.at("instance");
    x.iter = r.at("iter");
    x.k = r.at("k");
    x.b = r.at("b");
    x.sample = r.at("sample");
    x.child_k = r.at("child_k");
    x.child_instance = r.at("child_instance");
    x.vertices_before = r.at("vertices_before");
    x.edges_before = r.at("edges_before");
    x.vertices_after = r.at("vertices_after");
    x.edges_after = r.at("edges_after");
    x.split_edges = r.at("split_edges");
    const Json& steps = r.at("shortcut_edges");
    for (std::size_t s = 1; s <= 5; ++s) x.shortcut_edges[s] = steps.at(s - 1);
    x.h_before = r.at("h_before");
    x.h_after = r.at("h_after");
    x.k_after = r.at("k_after");
    x.sum_sq = r.at("sum_sq");
    x.sum_lin = r.at("sum_lin");
    x.bidi_edges_examined = r.at("bidi_edges_examined");
    x.bidi_heap_ops = r.at("bidi_heap_ops");
    t.iterations.push_back(x);
  }
  if (j.contains("phase_seconds")) {
    for (const auto& [name, sec] : j.at("phase_seconds").items()) {
      t.phase_seconds[name] = sec.get<double>();
    }
  }
  return t;
}

}  // namespace

template <class W>
std::string render_text(const Graph<W>& g, const SsspOutcome<W>& outcome) {
  std::ostringstream out;
  if (outcome.has_cycle()) {
    out << "NEGATIVE CYCLE\n";
    for (VertexId v : outcome.cycle->vertices) out << "c " << v << '\n';
    out << "cycle_weight "
        << WeightTraits<W>::to_string(cycle_weight(g, *outcome.cycle)) << '\n';
    return out.str();
  }
  for (std::size_t v = 0; v < outcome.dist.size(); ++v) {
    out << "d " << v << ' ' << WeightTraits<W>::to_string(outcome.dist[v])
        << '\n';
  }
  return out.str();
}

template <class W>
std::string render_json(const Graph<W>& g, const SsspOutcome<W>& outcome,
                        const RunTrace* trace, const ReportOptions& opts) {
  Json j;
  j["schema"] = kReportSchema;
  j["algorithm"] = opts.algorithm;
  j["mode"] = opts.mode;
  if (opts.source >= 0) {
    j["source"] = opts.source;
  } else {
    j["source"] = "super";
  }
  j["n"] = g.num_vertices();
  j["m"] = g.num_edges();
  if (outcome.has_cycle()) {
    j["status"] = "negative_cycle";
    j["cycle"] = outcome.cycle->vertices;
    j["cycle_edges"] = outcome.cycle->edges;
    j["cycle_weight"] =
        WeightTraits<W>::to_string(cycle_weight(g, *outcome.cycle));
  } else {
    j["status"] = "ok";
    Json d = Json::array();
    for (const W& w : outcome.dist) d.push_back(WeightTraits<W>::to_string(w));
    j["dist"] = std::move(d);
  }
  if (trace != nullptr && opts.include_trace) {
    j["trace"] = trace_json(*trace, opts.timings);
  }
  return j.dump(2) + "\n";
}

std::string trace_to_json(const RunTrace& trace, bool timings) {
  return trace_json(trace, timings).dump(2);
}

ParsedReport parse_report_json(std::string_view text) {
  ParsedReport r;
  try {
    Json j = Json::parse(text);
    r.schema = j.at("schema");
    if (r.schema != kReportSchema) {
      throw ParseError(0, "unsupported report schema " +
                              std::to_string(r.schema));
    }
    r.status = j.at("status");
    r.algorithm = j.value("algorithm", "");
    r.mode = j.value("mode", "");
    const Json& src = j.at("source");
    r.source = src.is_number() ? src.get<long long>() : -1;
    if (r.status == "ok") {
      r.dist = j.at("dist").get<std::vector<std::string>>();
    } else if (r.status == "negative_cycle") {
      r.cycle = j.at("cycle").get<std::vector<VertexId>>();
      r.cycle_edges = j.at("cycle_edges").get<std::vector<EdgeId>>();
      r.cycle_weight = j.at("cycle_weight");
    } else {
      throw ParseError(0, "unknown status '" + r.status + "'");
    }
    if (j.contains("trace")) {
      r.has_trace = true;
      r.trace = trace_from_json(j.at("trace"));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed report: ") + e.what());
  }
  return r;
}

#define NEGSSSP_INSTANTIATE(W)                                                \
  template std::string render_text(const Graph<W>&, const SsspOutcome<W>&);   \
  template std::string render_json(const Graph<W>&, const SsspOutcome<W>&,    \
                                   const RunTrace*, const ReportOptions&);

NEGSSSP_INSTANTIATE(double)
NEGSSSP_INSTANTIATE(Rational)

}  // namespace negsssp
