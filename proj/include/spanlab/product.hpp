#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "spanlab/graph.hpp"

namespace spanlab {

/// Movement rules and the self-product each one induces:
/// traditional -> strong product, active -> tensor product,
/// lazy -> Cartesian product.
enum class Rule { traditional, active, lazy };

inline constexpr std::array<Rule, 3> kAllRules{Rule::traditional, Rule::active, Rule::lazy};

std::string_view to_string(Rule rule) noexcept;
std::optional<Rule> parse_rule(std::string_view name) noexcept;

/// True when (u, x) -> (u2, x2) is an edge of the rule's product of the
/// base graph with itself. A pair never neighbours itself.
bool is_product_edge(const Graph& base, Rule rule, Vertex u, Vertex x, Vertex u2, Vertex x2);

/// Self-product of a base graph restricted to ordered pairs (u, v) with
/// d(u, v) >= threshold. A pair is identified by its index u * n + v, where
/// the first coordinate is Alice's position and the second Bob's.
class ProductGraph {
 public:
  const Graph& base() const noexcept { return base_; }
  Rule rule() const noexcept { return rule_; }
  int threshold() const noexcept { return threshold_; }
  int base_order() const noexcept { return base_.order(); }

  /// Retained pair indices, ascending.
  std::span<const int> vertices() const noexcept { return vertices_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool contains(int pair) const { return present_.at(pair); }
  /// Neighbouring retained pairs, ascending. Empty for absent pairs.
  std::span<const int> neighbors(int pair) const { return adjacency_.at(pair); }

  int pair_index(Vertex alice, Vertex bob) const noexcept { return alice * base_order() + bob; }
  Vertex first(int pair) const noexcept { return pair / base_order(); }
  Vertex second(int pair) const noexcept { return pair % base_order(); }

  /// Base-graph distance between the two coordinates of a pair.
  int separation(int pair) const { return base_dist_[pair]; }

  friend ProductGraph build_product(const Graph& h, Rule rule);
  friend ProductGraph safety_subgraph(const ProductGraph& p, int k);

 private:
  Graph base_;
  Rule rule_ = Rule::traditional;
  int threshold_ = 0;
  std::vector<int> base_dist_;
  std::vector<int> vertices_;
  std::vector<bool> present_;
  std::vector<std::vector<int>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Full product on all n^2 pairs (threshold 0).
ProductGraph build_product(const Graph& h, Rule rule);

/// Induced subgraph on the pairs at distance >= k. The recorded threshold is
/// the larger of k and the input's threshold.
ProductGraph safety_subgraph(const ProductGraph& p, int k);

}  // namespace spanlab
