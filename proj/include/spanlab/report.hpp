#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spanlab/graph.hpp"
#include "spanlab/product.hpp"
#include "spanlab/span.hpp"
#include "spanlab/structure.hpp"
#include "spanlab/verification.hpp"
#include "spanlab/walks.hpp"

namespace spanlab {

inline constexpr std::string_view kToolName = "spanlab";
inline constexpr std::string_view kToolVersion = "0.1.0";

enum class OutputFormat { text, json };

std::optional<OutputFormat> parse_output_format(std::string_view name) noexcept;

struct GraphDescriptor {
  std::string source;  // e.g. "fixture:figure1", "file:g.txt", "cycle:4"
  int order = 0;
  int size = 0;
  std::string graph6;
  std::vector<std::string> labels;
};

GraphDescriptor describe(const Graph& g, std::string source);

struct SpanRun {
  GraphDescriptor graph;
  std::vector<Rule> rules;      // reported rules, in order
  std::vector<SpanKind> kinds;  // reported kinds, in order
  SpanReport spans;
};

struct MinWalkRun {
  GraphDescriptor graph;
  Rule rule = Rule::traditional;
  MinStepsResult result;
  std::vector<std::string> alice;  // labels
  std::vector<std::string> bob;
  std::vector<int> distances;  // per time step
};

MinWalkRun make_minwalk_run(const Graph& g, GraphDescriptor descriptor, Rule rule,
                            const MinStepsResult& result);

struct AnalyzeRun {
  GraphDescriptor graph;
  Metrics metrics;
  ChordalityResult chordality;
  IntervalCertificate interval;
  std::vector<std::vector<std::string>> maximal_cliques;  // labels
  std::vector<std::vector<std::string>> end_cliques;      // empty unless interval
  CutSetCatalog cut_sets;
  std::vector<std::string> labels;  // for rendering vertex ids
};

struct VerifyInstance {
  GraphDescriptor graph;
  std::vector<TheoremReport> reports;
};

struct VerifyRun {
  std::string source;
  std::vector<VerifyInstance> instances;

  bool has_violation() const noexcept;
};

std::string emit_report(const SpanRun& run, OutputFormat format);
std::string emit_report(const MinWalkRun& run, OutputFormat format);
std::string emit_report(const AnalyzeRun& run, OutputFormat format);
std::string emit_report(const VerifyRun& run, OutputFormat format);

}  // namespace spanlab
