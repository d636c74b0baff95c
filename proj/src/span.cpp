#include "spanlab/span.hpp"

#include <algorithm>

namespace spanlab {

std::string_view to_string(SpanKind kind) noexcept {
  return kind == SpanKind::vertex ? "vertex" : "edge";
}

std::optional<SpanKind> parse_kind(std::string_view name) noexcept {
  if (name == "vertex") return SpanKind::vertex;
  if (name == "edge") return SpanKind::edge;
  return std::nullopt;
}

std::vector<Component> product_components(const ProductGraph& p) {
  std::vector<Component> components;
  std::vector<bool> seen(static_cast<std::size_t>(p.base_order()) * p.base_order(), false);
  for (int start : p.vertices()) {
    if (seen[start]) continue;
    Component comp{start};
    seen[start] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (int next : p.neighbors(comp[i])) {
        if (!seen[next]) {
          seen[next] = true;
          comp.push_back(next);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool projects_onto_base(const ProductGraph& p, const Component& c) {
  const int n = p.base_order();
  std::vector<bool> hit_first(n, false);
  std::vector<bool> hit_second(n, false);
  for (int pair : c) {
    hit_first[p.first(pair)] = true;
    hit_second[p.second(pair)] = true;
  }
  auto all = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
  return all(hit_first) && all(hit_second);
}

bool covers_base_edges(const ProductGraph& p, const Component& c) {
  const Graph& h = p.base();
  const int n = h.order();
  std::vector<bool> first(static_cast<std::size_t>(n) * n, false);
  std::vector<bool> second(first.size(), false);
  for (int pair : c) {
    const Vertex a = p.first(pair);
    const Vertex b = p.second(pair);
    for (int next : p.neighbors(pair)) {
      const Vertex a2 = p.first(next);
      const Vertex b2 = p.second(next);
      if (a != a2) first[std::min(a, a2) * n + std::max(a, a2)] = true;
      if (b != b2) second[std::min(b, b2) * n + std::max(b, b2)] = true;
    }
  }
  for (auto [u, v] : h.edges()) {
    if (!first[u * n + v] || !second[u * n + v]) return false;
  }
  return true;
}

std::vector<Component> good_components(const ProductGraph& p) {
  std::vector<Component> good;
  for (auto& c : product_components(p)) {
    if (projects_onto_base(p, c)) good.push_back(std::move(c));
  }
  return good;
}

std::vector<Component> edge_good_components(const ProductGraph& p) {
  std::vector<Component> good;
  for (auto& c : product_components(p)) {
    if (projects_onto_base(p, c) && covers_base_edges(p, c)) good.push_back(std::move(c));
  }
  return good;
}

namespace {

bool qualifies(const ProductGraph& p, const Component& c, SpanKind kind) {
  return projects_onto_base(p, c) && (kind == SpanKind::vertex || covers_base_edges(p, c));
}

std::optional<SpanCertificate> find_certificate(const ProductGraph& level, SpanKind kind) {
  auto components = product_components(level);
  for (std::size_t id = 0; id < components.size(); ++id) {
    if (qualifies(level, components[id], kind)) {
      return SpanCertificate{level.threshold(), id, std::move(components[id])};
    }
  }
  return std::nullopt;
}

SpanResult span_from_product(const ProductGraph& full, int radius, SpanKind kind) {
  for (int k = radius; k >= 0; --k) {
    if (auto cert = find_certificate(safety_subgraph(full, k), kind)) {
      return SpanResult{k, std::move(*cert)};
    }
  }
  // k = 0 always admits the component of the diagonal for connected bases.
  throw GraphError("no good component at threshold 0; is the graph connected?");
}

void require_connected(const Graph& h) {
  if (h.empty()) throw GraphError("span is undefined for the empty graph");
  if (!is_connected(h)) throw GraphError("span requires a connected graph");
}

}  // namespace

SpanResult compute_span(const Graph& h, Rule rule, SpanKind kind) {
  require_connected(h);
  return span_from_product(build_product(h, rule), metrics(h).radius, kind);
}

SpanResult vertex_span(const Graph& h, Rule rule) { return compute_span(h, rule, SpanKind::vertex); }

SpanResult edge_span(const Graph& h, Rule rule) { return compute_span(h, rule, SpanKind::edge); }

SpanReport span_report(const Graph& h) {
  require_connected(h);
  const int radius = metrics(h).radius;
  SpanReport report;
  for (Rule rule : kAllRules) {
    const ProductGraph full = build_product(h, rule);
    auto& row = report.results[static_cast<std::size_t>(rule)];
    row[0] = span_from_product(full, radius, SpanKind::vertex);
    // The edge span never exceeds the vertex span.
    row[1] = span_from_product(full, row[0].value, SpanKind::edge);
  }
  return report;
}

bool certificate_holds(const Graph& h, Rule rule, SpanKind kind, const SpanCertificate& cert) {
  const ProductGraph level = safety_subgraph(build_product(h, rule), cert.threshold);
  const auto components = product_components(level);
  if (cert.component_id >= components.size()) return false;
  const Component& c = components[cert.component_id];
  return c == cert.component && qualifies(level, c, kind);
}

}  // namespace spanlab
