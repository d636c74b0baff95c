#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "spanlab/graph.hpp"

namespace spanlab {

enum class GraphFormat { graph6, edgelist };

std::optional<GraphFormat> parse_graph_format(std::string_view name);

/// graph6: the standard 6-bit upper-triangle encoding; an optional
/// ">>graph6<<" header and trailing whitespace are accepted.
/// edgelist: one "u v" index pair per line; blank lines and '#' comments are
/// skipped; the vertex count is the largest index plus one.
///
/// Throws ParseError on malformed text and GraphError on loops or duplicate
/// edges.
Graph parse_graph(std::string_view text, GraphFormat format);

/// Picks graph6 when the first non-blank line is a single token of graph6
/// characters, edge list otherwise.
GraphFormat detect_format(std::string_view text);

std::string to_graph6(const Graph& g);
std::string to_edgelist(const Graph& g);

}  // namespace spanlab
