#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "spanlab/graph.hpp"
#include "spanlab/product.hpp"

namespace spanlab {

enum class SpanKind { vertex, edge };

inline constexpr std::array<SpanKind, 2> kAllKinds{SpanKind::vertex, SpanKind::edge};

std::string_view to_string(SpanKind kind) noexcept;
std::optional<SpanKind> parse_kind(std::string_view name) noexcept;

/// Connected component of a product graph: sorted pair indices.
using Component = std::vector<int>;

/// Components ordered by their smallest pair index.
std::vector<Component> product_components(const ProductGraph& p);

/// Both projections of the component hit every base vertex.
bool projects_onto_base(const ProductGraph& p, const Component& c);

/// Every base edge is traversed by some component edge in the first
/// coordinate, and by some (possibly different) component edge in the second.
bool covers_base_edges(const ProductGraph& p, const Component& c);

std::vector<Component> good_components(const ProductGraph& p);
std::vector<Component> edge_good_components(const ProductGraph& p);

struct SpanCertificate {
  int threshold = 0;
  std::size_t component_id = 0;  // position in product_components() at threshold
  Component component;
};

struct SpanResult {
  int value = 0;
  SpanCertificate certificate;
};

/// Largest k <= rad(h) whose safety subgraph has a good (vertex kind) or
/// edge-good (edge kind) component. Throws GraphError for disconnected or
/// empty h.
SpanResult compute_span(const Graph& h, Rule rule, SpanKind kind);
SpanResult vertex_span(const Graph& h, Rule rule);
SpanResult edge_span(const Graph& h, Rule rule);

/// All six variants.
struct SpanReport {
  std::array<std::array<SpanResult, 2>, 3> results;

  const SpanResult& at(Rule rule, SpanKind kind) const {
    return results[static_cast<std::size_t>(rule)][static_cast<std::size_t>(kind)];
  }
  int value(Rule rule, SpanKind kind) const { return at(rule, kind).value; }
};

SpanReport span_report(const Graph& h);

/// Recomputes the certificate's component and checks it is still (edge-)good.
bool certificate_holds(const Graph& h, Rule rule, SpanKind kind, const SpanCertificate& cert);

}  // namespace spanlab
