#include "spanlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spanlab/errors.hpp"
#include "spanlab/generators.hpp"
#include "spanlab/graph_io.hpp"
#include "spanlab/report.hpp"
#include "spanlab/verification.hpp"
#include "spanlab/walks.hpp"

namespace spanlab {
namespace {

struct Options {
  std::string fixture;
  std::string family;
  std::string file;
  std::string rule;
  std::string kind = "both";
  std::string format = "text";
  std::uint64_t seed = 0;
  int seeds = 1;
  int cap = 0;
  int cut_cap = kDefaultCutSetCap;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* cap_opt = nullptr;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--fixture", o.fixture, "built-in graph: figure1, figure2, figure3, figure3_base");
  cmd->add_option("--family", o.family, "generated graph, e.g. cycle:5, random_interval:8:3");
  cmd->add_option("--file", o.file, "graph6 or edge-list file ('-' reads standard input)");
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  o.seed_opt = cmd->add_option("--seed", o.seed, "seed for random families");
}

void add_cap(CLI::App* cmd, Options& o, const std::string& what) {
  o.cap_opt = cmd->add_option("--cap", o.cap, what)->check(CLI::PositiveNumber);
}

struct Source {
  Graph graph;
  std::string name;
};

std::string read_input(const std::string& path) {
  std::ostringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
    return text.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  text << in.rdbuf();
  return text.str();
}

std::string family_name(const Options& o) {
  if (!o.fixture.empty()) return "fixture:" + o.fixture;
  if (!o.family.empty()) return o.family;
  return "file:" + o.file;
}

void require_one_source(const Options& o) {
  const int given = !o.fixture.empty() + !o.family.empty() + !o.file.empty();
  if (given != 1) throw UsageError("give exactly one of --fixture, --family, --file");
}

// Graphs named by the invocation: one, or `count` consecutive seeds of a
// random family.
std::vector<Source> load(const Options& o, int count) {
  require_one_source(o);
  std::vector<Source> out;
  if (!o.fixture.empty()) {
    out.push_back({fixture(o.fixture), family_name(o)});
  } else if (!o.file.empty()) {
    const std::string text = read_input(o.file);
    out.push_back({parse_graph(text, detect_format(text)), family_name(o)});
  } else if (!is_random_family(o.family) || (count == 1 && !o.seed_opt->count())) {
    out.push_back({generate_family(o.family), family_name(o)});
  } else {
    for (int i = 0; i < count; ++i) {
      const std::uint64_t s = o.seed + static_cast<std::uint64_t>(i);
      out.push_back({generate_family(o.family, s), o.family + " seed=" + std::to_string(s)});
    }
  }
  return out;
}

// --cap beats SPANLAB_CAP beats the built-in default.
int resolve_cap(const Options& o, int fallback, std::ostream& err) {
  int cap = fallback;
  if (o.cap_opt && o.cap_opt->count()) {
    cap = o.cap;
  } else if (const char* env = std::getenv(kCapEnv); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1'000'000) {
      throw UsageError(std::string(kCapEnv) + " must be a positive integer, got '" + env + "'");
    }
    cap = static_cast<int>(v);
  }
  if (cap > fallback) {
    err << "warning: cap raised to " << cap << " (default " << fallback
        << "); exhaustive searches grow exponentially\n";
  }
  return cap;
}

OutputFormat format_of(const Options& o) { return *parse_output_format(o.format); }

int run_span(const Options& o, std::ostream& out) {
  const Source src = std::move(load(o, 1).front());
  SpanRun run;
  run.graph = describe(src.graph, src.name);
  if (o.rule.empty()) {
    run.rules.assign(kAllRules.begin(), kAllRules.end());
  } else {
    run.rules = {*parse_rule(o.rule)};
  }
  if (o.kind == "both") {
    run.kinds.assign(kAllKinds.begin(), kAllKinds.end());
  } else {
    run.kinds = {*parse_kind(o.kind)};
  }
  for (Rule r : run.rules) {
    for (SpanKind k : run.kinds) {
      run.spans.results[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] =
          compute_span(src.graph, r, k);
    }
  }
  out << emit_report(run, format_of(o));
  return kExitOk;
}

int run_minwalk(const Options& o, std::ostream& out, std::ostream& err) {
  const int cap = resolve_cap(o, kDefaultWalkCap, err);
  const Source src = std::move(load(o, 1).front());
  const Rule rule = o.rule.empty() ? Rule::traditional : *parse_rule(o.rule);
  const MinStepsResult result = min_steps(src.graph, rule, cap);
  out << emit_report(make_minwalk_run(src.graph, describe(src.graph, src.name), rule, result),
                     format_of(o));
  return kExitOk;
}

std::vector<std::vector<std::string>> labelled_sets(const Graph& g, const std::vector<VertexSet>& sets) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : sets) {
    auto& row = out.emplace_back();
    for (Vertex v : s) row.push_back(g.label(v));
  }
  return out;
}

int run_analyze(const Options& o, std::ostream& out, std::ostream& err) {
  const int cap = resolve_cap(o, kDefaultRepresentationCap, err);
  const Source src = std::move(load(o, 1).front());
  const Graph& g = src.graph;
  AnalyzeRun run;
  run.graph = describe(g, src.name);
  run.labels = g.labels();
  run.metrics = metrics(g);
  run.chordality = is_chordal(g);
  run.interval = interval_certificate(g, cap);
  run.maximal_cliques = labelled_sets(g, maximal_cliques(g));
  if (run.interval.is_interval && !g.empty() && is_connected(g)) {
    run.end_cliques = labelled_sets(g, end_cliques(g, cap));
  }
  run.cut_sets = minimal_cut_sets(g, o.cut_cap);
  out << emit_report(run, format_of(o));
  return kExitOk;
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  IntervalTheoremOptions options;
  options.representation_cap = resolve_cap(o, kDefaultRepresentationCap, err);
  options.cut_set_cap = o.cut_cap;
  VerifyRun run;
  run.source = family_name(o);
  for (const Source& src : load(o, o.seeds)) {
    run.instances.push_back({describe(src.graph, src.name), check_all(src.graph, options)});
  }
  out << emit_report(run, format_of(o));
  return run.has_violation() ? kExitViolation : kExitOk;
}

int run_generate(const Options& o, std::ostream& out) {
  for (const Source& src : load(o, o.seeds)) out << to_graph6(src.graph) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Safety spans of graphs under three movement rules", "spanlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  Options o;
  const std::vector<std::string> rules{"traditional", "active", "lazy"};

  auto* span = app.add_subcommand("span", "vertex and edge spans");
  add_common(span, o);
  span->add_option("--rule", o.rule, "movement rule (default: all three)")->check(CLI::IsMember(rules));
  span->add_option("--kind", o.kind, "span kind")->check(CLI::IsMember({"vertex", "edge", "both"}));

  auto* minwalk = app.add_subcommand("minwalk", "shortest optimal walk pair");
  add_common(minwalk, o);
  minwalk->add_option("--rule", o.rule, "movement rule (default: traditional)")->check(CLI::IsMember(rules));

  auto* analyze = app.add_subcommand("analyze", "metrics, interval certificate, minimal cut sets");
  add_common(analyze, o);
  analyze->add_option("--cut-cap", o.cut_cap, "largest cut set size enumerated")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "check the span theorems");
  add_common(verify, o);
  verify->add_option("--seeds", o.seeds, "number of consecutive seeds for random families")
      ->check(CLI::PositiveNumber);
  verify->add_option("--cut-cap", o.cut_cap, "largest cut set size enumerated")->check(CLI::PositiveNumber);

  auto* generate = app.add_subcommand("generate", "print graph6");
  add_common(generate, o);
  generate->add_option("--seeds", o.seeds, "number of consecutive seeds for random families")
      ->check(CLI::PositiveNumber);

  // Each subcommand gets its own --cap; only the selected one is parsed.
  add_cap(minwalk, o, "largest order for the covering search");
  CLI::Option* minwalk_cap = o.cap_opt;
  add_cap(analyze, o, "largest order for interval representations");
  CLI::Option* analyze_cap = o.cap_opt;
  add_cap(verify, o, "largest order for end-clique enumeration");
  CLI::Option* verify_cap = o.cap_opt;

  std::vector<const char*> argv{"spanlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  // add_common overwrote seed_opt for every subcommand; rebind to the parsed one.
  for (auto* cmd : {span, minwalk, analyze, verify, generate}) {
    if (cmd->parsed()) o.seed_opt = cmd->get_option("--seed");
  }

  try {
    if (span->parsed()) return run_span(o, out);
    if (minwalk->parsed()) {
      o.cap_opt = minwalk_cap;
      return run_minwalk(o, out, err);
    }
    if (analyze->parsed()) {
      o.cap_opt = analyze_cap;
      return run_analyze(o, out, err);
    }
    if (verify->parsed()) {
      o.cap_opt = verify_cap;
      return run_verify(o, out, err);
    }
    return run_generate(o, out);
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace spanlab
