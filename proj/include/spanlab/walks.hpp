#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spanlab/graph.hpp"
#include "spanlab/product.hpp"

namespace spanlab {

/// Two synchronised walks on a base graph. Position t of each walk is the
/// player's vertex at time t.
struct WalkPair {
  std::vector<Vertex> alice;
  std::vector<Vertex> bob;
  Rule rule = Rule::traditional;
  int safety = 0;  // min_t d(alice[t], bob[t])

  int moves() const noexcept { return alice.empty() ? 0 : static_cast<int>(alice.size()) - 1; }
};

/// Minimum over time of the distance between the players. Throws GraphError
/// on unequal or empty walks.
int safety_distance(const Graph& h, const WalkPair& w);

/// A walk in a product graph, as pair indices.
struct CoveringWalk {
  int moves = 0;
  std::vector<int> pairs;
};

/// Shortest walk in p whose two projections each visit every base vertex.
///
/// Breadth-first search over states (pair, vertices seen by Alice, vertices
/// seen by Bob), seeded with every pair of every good component. Among the
/// shortest walks the lexicographically least pair-index sequence is
/// returned. nullopt when p has no good component.
std::optional<CoveringWalk> shortest_covering_walk(const ProductGraph& p);

inline constexpr int kDefaultWalkCap = 10;

struct MinStepsResult {
  int span = 0;
  int moves = 0;
  WalkPair walks;
};

/// Vertex span of h under the rule, and a shortest pair of walks that keeps
/// that distance while both players visit every vertex. Throws CapacityError
/// when h has more than `cap` vertices.
MinStepsResult min_steps(const Graph& h, Rule rule, int cap = kDefaultWalkCap);

/// Builds a walk pair from vertex labels; throws GraphError on unknown labels.
WalkPair walk_pair_from_labels(const Graph& h, std::span<const std::string> alice,
                               std::span<const std::string> bob, Rule rule);

struct WalkValidation {
  std::vector<std::size_t> illegal_steps;  // t such that t -> t+1 breaks the rule
  bool alice_surjective = false;
  bool bob_surjective = false;
  int safety = 0;
  bool meets_threshold = false;

  bool legal() const noexcept { return illegal_steps.empty(); }
  bool valid() const noexcept {
    return legal() && alice_surjective && bob_surjective && meets_threshold;
  }
};

/// True when one time step respects the rule. Traditional allows any mix of
/// staying and moving along an edge; active requires both players to move;
/// lazy requires exactly one to move.
bool legal_step(const Graph& h, Rule rule, Vertex a, Vertex b, Vertex a2, Vertex b2);

/// Throws GraphError on empty or unequal-length walks, or vertices outside h.
WalkValidation validate_walk_pair(const WalkPair& w, const Graph& h, int k);

/// Re-rooting of an optimal pair: both walks are traversed as
/// i, i-1, ..., 0, 1, ..., last, last-1, ..., j (0-based), so Alice starts at
/// alice[i] and ends at alice[j].
WalkPair reroot(const WalkPair& w, std::size_t i, std::size_t j);

}  // namespace spanlab
