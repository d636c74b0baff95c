#include "spanlab/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "spanlab/graph_io.hpp"

namespace spanlab {
namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> label_list(const std::vector<std::string>& labels, std::span<const Vertex> vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(labels.at(v));
  return out;
}

std::string joined(const std::vector<std::string>& items, std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string braced(const std::vector<std::string>& items) { return "{" + joined(items, ",") + "}"; }

Json graph_json(const GraphDescriptor& g) {
  return Json{{"source", g.source},
              {"order", g.order},
              {"size", g.size},
              {"graph6", g.graph6},
              {"labels", g.labels}};
}

Json envelope(Json graph, Json results) {
  return Json{{"tool", kToolName}, {"version", kToolVersion}, {"graph", std::move(graph)},
              {"results", std::move(results)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void graph_lines(std::ostream& out, const GraphDescriptor& g) {
  out << "graph: " << g.source << "\n";
  out << "order: " << g.order << "\n";
  out << "size: " << g.size << "\n";
  out << "graph6: " << g.graph6 << "\n";
}

std::string distance_text(int d) { return d == kUnreachable ? "inf" : std::to_string(d); }

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) noexcept {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

GraphDescriptor describe(const Graph& g, std::string source) {
  return {std::move(source), g.order(), g.size(), to_graph6(g), g.labels()};
}

MinWalkRun make_minwalk_run(const Graph& g, GraphDescriptor descriptor, Rule rule,
                            const MinStepsResult& result) {
  MinWalkRun run{std::move(descriptor), rule, result, {}, {}, {}};
  run.alice = label_list(g.labels(), result.walks.alice);
  run.bob = label_list(g.labels(), result.walks.bob);
  const auto dist = distance_matrix(g);
  for (std::size_t t = 0; t < result.walks.alice.size(); ++t) {
    run.distances.push_back(
        dist[static_cast<std::size_t>(result.walks.alice[t]) * g.order() + result.walks.bob[t]]);
  }
  return run;
}

bool VerifyRun::has_violation() const noexcept {
  return std::any_of(instances.begin(), instances.end(), [](const VerifyInstance& i) {
    return std::any_of(i.reports.begin(), i.reports.end(),
                       [](const TheoremReport& r) { return r.has_violation(); });
  });
}

// ---------------------------------------------------------------------------
// span

std::string emit_report(const SpanRun& run, OutputFormat format) {
  if (format == OutputFormat::json) {
    Json spans = Json::object();
    for (Rule rule : run.rules) {
      Json per_kind = Json::object();
      for (SpanKind kind : run.kinds) per_kind[std::string(to_string(kind))] = run.spans.value(rule, kind);
      spans[std::string(to_string(rule))] = std::move(per_kind);
    }
    return dump(envelope(graph_json(run.graph), Json{{"spans", std::move(spans)}}));
  }
  std::ostringstream out;
  graph_lines(out, run.graph);
  for (Rule rule : run.rules) {
    for (SpanKind kind : run.kinds) {
      out << "span " << to_string(rule) << " " << to_string(kind) << ": " << run.spans.value(rule, kind)
          << "\n";
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// minwalk

std::string emit_report(const MinWalkRun& run, OutputFormat format) {
  if (format == OutputFormat::json) {
    Json results{{"rule", to_string(run.rule)},
                 {"span", run.result.span},
                 {"moves", run.result.moves},
                 {"alice", run.alice},
                 {"bob", run.bob},
                 {"distances", run.distances}};
    return dump(envelope(graph_json(run.graph), std::move(results)));
  }
  std::ostringstream out;
  graph_lines(out, run.graph);
  out << "rule: " << to_string(run.rule) << "\n";
  out << "span: " << run.result.span << "\n";
  out << "moves: " << run.result.moves << "\n";
  out << "alice: " << joined(run.alice) << "\n";
  out << "bob: " << joined(run.bob) << "\n";
  std::vector<std::string> d;
  for (int x : run.distances) d.push_back(distance_text(x));
  out << "distances: " << joined(d) << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// analyze

std::string emit_report(const AnalyzeRun& run, OutputFormat format) {
  const auto& m = run.metrics;
  const auto& labels = run.labels;
  std::vector<std::vector<std::string>> clique_path;
  for (const auto& c : run.interval.clique_path) clique_path.push_back(label_list(labels, c));

  if (format == OutputFormat::json) {
    Json metrics{{"connected", m.connected},
                 {"radius", m.connected ? Json(m.radius) : Json(nullptr)},
                 {"diameter", m.connected ? Json(m.diameter) : Json(nullptr)},
                 {"girth", m.girth ? Json(*m.girth) : Json(nullptr)}};
    Json ecc = Json::array();
    for (int e : m.eccentricity) ecc.push_back(e == kUnreachable ? Json(nullptr) : Json(e));
    metrics["eccentricity"] = std::move(ecc);

    Json chordality{{"chordal", run.chordality.chordal}};
    if (run.chordality.chordal) {
      chordality["elimination_order"] = label_list(labels, run.chordality.elimination_order);
    } else {
      chordality["chordless_cycle"] = label_list(labels, run.chordality.chordless_cycle);
    }

    Json interval{{"interval", run.interval.is_interval}};
    if (run.interval.is_interval) {
      Json rep = Json::array();
      for (std::size_t v = 0; v < run.interval.representation.size(); ++v) {
        const auto& iv = run.interval.representation[v];
        rep.push_back(Json{{"vertex", labels.at(v)}, {"left", iv.left}, {"right", iv.right}});
      }
      interval["representation"] = std::move(rep);
      interval["clique_path"] = clique_path;
      interval["end_cliques"] = run.end_cliques;
    } else if (!run.interval.chordless_cycle.empty()) {
      interval["chordless_cycle"] = label_list(labels, run.interval.chordless_cycle);
    } else if (run.interval.asteroidal_triple) {
      interval["asteroidal_triple"] = label_list(labels, *run.interval.asteroidal_triple);
    }

    Json cuts = Json::array();
    for (const auto& cs : run.cut_sets.cut_sets) {
      Json comps = Json::array();
      for (const auto& c : cs.components) comps.push_back(label_list(labels, c));
      cuts.push_back(Json{{"vertices", label_list(labels, cs.vertices)},
                          {"clique", cs.clique},
                          {"components", std::move(comps)}});
    }
    Json catalog{{"size_cap", run.cut_sets.size_cap}, {"minimal_cut_sets", std::move(cuts)}};

    Json results{{"metrics", std::move(metrics)},
                 {"chordality", std::move(chordality)},
                 {"maximal_cliques", run.maximal_cliques},
                 {"interval", std::move(interval)},
                 {"cut_sets", std::move(catalog)}};
    return dump(envelope(graph_json(run.graph), std::move(results)));
  }

  std::ostringstream out;
  graph_lines(out, run.graph);
  out << "connected: " << (m.connected ? "yes" : "no") << "\n";
  out << "radius: " << distance_text(m.radius) << "\n";
  out << "diameter: " << distance_text(m.diameter) << "\n";
  out << "girth: " << (m.girth ? std::to_string(*m.girth) : "none") << "\n";
  out << "chordal: " << (run.chordality.chordal ? "yes" : "no") << "\n";
  if (!run.chordality.chordal) {
    out << "chordless cycle: " << joined(label_list(labels, run.chordality.chordless_cycle)) << "\n";
  }
  for (const auto& c : run.maximal_cliques) out << "maximal clique: " << braced(c) << "\n";
  out << "interval: " << (run.interval.is_interval ? "yes" : "no") << "\n";
  if (run.interval.is_interval) {
    for (std::size_t v = 0; v < run.interval.representation.size(); ++v) {
      const auto& iv = run.interval.representation[v];
      out << "interval " << labels.at(v) << ": [" << iv.left << ", " << iv.right << "]\n";
    }
    for (const auto& c : clique_path) out << "clique path: " << braced(c) << "\n";
    for (const auto& c : run.end_cliques) out << "end clique: " << braced(c) << "\n";
  } else if (run.interval.asteroidal_triple) {
    out << "asteroidal triple: " << joined(label_list(labels, *run.interval.asteroidal_triple)) << "\n";
  }
  out << "cut set cap: " << run.cut_sets.size_cap << "\n";
  for (const auto& cs : run.cut_sets.cut_sets) {
    std::vector<std::string> comps;
    for (const auto& c : cs.components) comps.push_back(braced(label_list(labels, c)));
    out << "minimal cut set: " << braced(label_list(labels, cs.vertices))
        << (cs.clique ? " clique" : " non-clique") << " components " << joined(comps) << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// verify

std::string emit_report(const VerifyRun& run, OutputFormat format) {
  if (format == OutputFormat::json) {
    Json instances = Json::array();
    Json violations = Json::array();
    for (const auto& inst : run.instances) {
      Json reports = Json::array();
      for (const auto& r : inst.reports) {
        Json checks = Json::array();
        for (const auto& c : r.checks) {
          Json check{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}};
          if (c.status == CheckStatus::violated) {
            check["witness"] = c.witness;
            violations.push_back(Json{{"graph6", r.graph_id}, {"check", c.name}, {"witness", c.witness}});
          }
          checks.push_back(std::move(check));
        }
        reports.push_back(Json{{"graph_id", r.graph_id}, {"checks", std::move(checks)}});
      }
      instances.push_back(Json{{"graph", graph_json(inst.graph)}, {"reports", std::move(reports)}});
    }
    Json results{{"instances", std::move(instances)}, {"violations", std::move(violations)}};
    return dump(envelope(Json{{"source", run.source}, {"instances", run.instances.size()}},
                         std::move(results)));
  }

  std::ostringstream out;
  out << "source: " << run.source << "\n";
  out << "instances: " << run.instances.size() << "\n";
  std::size_t violated = 0;
  for (const auto& inst : run.instances) {
    out << "graph6: " << inst.graph.graph6 << "\n";
    for (const auto& r : inst.reports) {
      for (const auto& c : r.checks) {
        out << "  " << c.name << ": " << to_string(c.status);
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
        if (c.status == CheckStatus::violated) {
          ++violated;
          out << "    witness: " << c.witness << "\n";
        }
      }
    }
  }
  out << "violations: " << violated << "\n";
  return out.str();
}

}  // namespace spanlab
