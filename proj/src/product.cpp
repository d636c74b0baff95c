#include "spanlab/product.hpp"

#include <algorithm>

namespace spanlab {

std::string_view to_string(Rule rule) noexcept {
  switch (rule) {
    case Rule::traditional: return "traditional";
    case Rule::active: return "active";
    case Rule::lazy: return "lazy";
  }
  return "unknown";
}

std::optional<Rule> parse_rule(std::string_view name) noexcept {
  for (Rule r : kAllRules) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

bool is_product_edge(const Graph& base, Rule rule, Vertex u, Vertex x, Vertex u2, Vertex x2) {
  const bool first_moves = base.adjacent(u, u2);
  const bool second_moves = base.adjacent(x, x2);
  const bool first_stays = u == u2;
  const bool second_stays = x == x2;
  switch (rule) {
    case Rule::traditional:
      return (first_stays && second_moves) || (first_moves && second_stays) ||
             (first_moves && second_moves);
    case Rule::active:
      return first_moves && second_moves;
    case Rule::lazy:
      return (first_moves && second_stays) || (first_stays && second_moves);
  }
  return false;
}

ProductGraph build_product(const Graph& h, Rule rule) {
  ProductGraph p;
  p.base_ = h;
  p.rule_ = rule;
  p.threshold_ = 0;
  p.base_dist_ = distance_matrix(h);

  const int n = h.order();
  const int pairs = n * n;
  p.vertices_.resize(pairs);
  for (int i = 0; i < pairs; ++i) p.vertices_[i] = i;
  p.present_.assign(pairs, true);
  p.adjacency_.assign(pairs, {});

  // Closed neighbourhoods give every candidate move; the rule filters them.
  std::vector<std::vector<Vertex>> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    auto nb = h.neighbors(v);
    closed[v].assign(nb.begin(), nb.end());
    closed[v].push_back(v);
    std::sort(closed[v].begin(), closed[v].end());
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex x = 0; x < n; ++x) {
      auto& adj = p.adjacency_[u * n + x];
      for (Vertex u2 : closed[u]) {
        for (Vertex x2 : closed[x]) {
          if (is_product_edge(h, rule, u, x, u2, x2)) adj.push_back(u2 * n + x2);
        }
      }
      p.edge_count_ += adj.size();
    }
  }
  p.edge_count_ /= 2;
  return p;
}

ProductGraph safety_subgraph(const ProductGraph& p, int k) {
  ProductGraph q;
  q.base_ = p.base_;
  q.rule_ = p.rule_;
  q.threshold_ = std::max(k, p.threshold_);
  q.base_dist_ = p.base_dist_;
  q.present_.assign(p.present_.size(), false);
  q.adjacency_.assign(p.adjacency_.size(), {});
  for (int pair : p.vertices_) {
    if (p.base_dist_[pair] >= k) {
      q.present_[pair] = true;
      q.vertices_.push_back(pair);
    }
  }
  for (int pair : q.vertices_) {
    auto& adj = q.adjacency_[pair];
    for (int other : p.adjacency_[pair]) {
      if (q.present_[other]) adj.push_back(other);
    }
    q.edge_count_ += adj.size();
  }
  q.edge_count_ /= 2;
  return q;
}

}  // namespace spanlab
