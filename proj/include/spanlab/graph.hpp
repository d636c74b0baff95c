#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spanlab/errors.hpp"

namespace spanlab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Distance sentinel for vertex pairs in different components.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Immutable simple undirected graph. Vertices are 0..n-1 in input order,
/// each with an external label; neighbour lists are kept sorted.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices labelled "0".."n-1".
  explicit Graph(int n);

  /// Throws GraphError on loops, duplicate edges, out-of-range endpoints or
  /// duplicate labels.
  Graph(std::vector<std::string> labels, std::span<const Edge> edges);
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  int size() const noexcept { return edge_count_; }
  bool empty() const noexcept { return adjacency_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  int max_degree() const noexcept;
  bool adjacent(Vertex u, Vertex v) const;

  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Vertex> find_label(std::string_view label) const;

  /// Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Same order and edge set, ignoring labels.
  bool same_structure(const Graph& other) const noexcept {
    return adjacency_ == other.adjacency_;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
};

/// Classical distance metrics. For disconnected graphs the affected
/// eccentricities, radius and diameter are kUnreachable.
struct Metrics {
  int order = 0;
  std::vector<int> dist;  // row-major order x order
  std::vector<int> eccentricity;
  int radius = 0;
  int diameter = 0;
  std::optional<int> girth;  // nullopt: acyclic
  bool connected = true;

  int distance(Vertex u, Vertex v) const {
    return dist[static_cast<std::size_t>(u) * order + v];
  }
};

/// Hop distances from one source; unreachable vertices get kUnreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// All-pairs hop distances, row-major.
std::vector<int> distance_matrix(const Graph& g);

Metrics metrics(const Graph& g);

/// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// G ∨ H. Vertices of h follow those of g. Labels are kept when the two label
/// sets are disjoint, otherwise every vertex is relabelled by index.
Graph join(const Graph& g, const Graph& h);

/// G[S]; vertex order follows g, labels are carried over from g.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

}  // namespace spanlab
