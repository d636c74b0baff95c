#include "spanlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace spanlab {
namespace {

std::vector<std::string> index_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

Graph::Graph(int n) : Graph(index_labels(n), std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(index_labels(n), edges) {}

Graph::Graph(std::vector<std::string> labels, std::span<const Edge> edges)
    : labels_(std::move(labels)), adjacency_(labels_.size()) {
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw GraphError("duplicate vertex label '" + l + "'");
  }
  const int n = order();
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                       " has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& nb = adjacency_[v];
    std::sort(nb.begin(), nb.end());
    if (auto dup = std::adjacent_find(nb.begin(), nb.end()); dup != nb.end()) {
      throw GraphError("duplicate edge " + std::to_string(std::min(v, *dup)) + "-" +
                       std::to_string(std::max(v, *dup)));
    }
  }
  edge_count_ = static_cast<int>(edges.size());
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (const auto& nb : adjacency_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adjacency_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<Vertex> Graph::find_label(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<int> dist;
  dist.reserve(static_cast<std::size_t>(n) * n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = bfs_distances(g, s);
    dist.insert(dist.end(), row.begin(), row.end());
  }
  return dist;
}

namespace {

// Length of the shortest cycle through edge uv: 1 + d(u, v) in G - uv.
std::optional<int> shortest_cycle_through(const Graph& g, Vertex u, Vertex v) {
  std::vector<int> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(x)) {
      if (x == u && w == v) continue;
      if (dist[w] != kUnreachable) continue;
      dist[w] = dist[x] + 1;
      if (w == v) return dist[w] + 1;
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

}  // namespace

Metrics metrics(const Graph& g) {
  Metrics m;
  m.order = g.order();
  m.dist = distance_matrix(g);
  m.eccentricity.assign(m.order, 0);
  for (Vertex v = 0; v < m.order; ++v) {
    int ecc = 0;
    for (Vertex w = 0; w < m.order; ++w) ecc = std::max(ecc, m.distance(v, w));
    m.eccentricity[v] = ecc;
  }
  if (m.order > 0) {
    m.radius = *std::min_element(m.eccentricity.begin(), m.eccentricity.end());
    m.diameter = *std::max_element(m.eccentricity.begin(), m.eccentricity.end());
  }
  m.connected = m.diameter != kUnreachable;
  for (auto [u, v] : g.edges()) {
    if (auto c = shortest_cycle_through(g, u, v); c && (!m.girth || *c < *m.girth)) {
      m.girth = c;
    }
  }
  return m;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> components;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph join(const Graph& g, const Graph& h) {
  const int ng = g.order();
  const int nh = h.order();
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + ng, v + ng);
  for (Vertex u = 0; u < ng; ++u) {
    for (Vertex v = 0; v < nh; ++v) edges.emplace_back(u, v + ng);
  }

  std::set<std::string_view> g_labels(g.labels().begin(), g.labels().end());
  bool disjoint = std::none_of(h.labels().begin(), h.labels().end(),
                               [&](const std::string& l) { return g_labels.contains(l); });
  if (!disjoint) return Graph(ng + nh, edges);
  std::vector<std::string> labels = g.labels();
  labels.insert(labels.end(), h.labels().begin(), h.labels().end());
  return Graph(std::move(labels), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> keep(subset.begin(), subset.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> local(g.order(), -1);
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= g.order()) {
      throw GraphError("vertex " + std::to_string(keep[i]) + " is not in the graph");
    }
    local[keep[i]] = static_cast<int>(i);
    labels.push_back(g.label(keep[i]));
  }
  std::vector<Edge> edges;
  for (Vertex u : keep) {
    for (Vertex w : g.neighbors(u)) {
      if (u < w && local[w] >= 0) edges.emplace_back(local[u], local[w]);
    }
  }
  return Graph(std::move(labels), edges);
}

}  // namespace spanlab
