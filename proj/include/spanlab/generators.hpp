#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "spanlab/graph.hpp"
#include "spanlab/structure.hpp"

namespace spanlab {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// K_{1,leaves}; the centre is vertex 0.
Graph star_graph(int leaves);
/// S_{1,n}: K_{1,n} with every edge subdivided once. Centre 0, middle
/// vertices 1..n, leaves n+1..2n with leaf n+i hanging off i.
Graph subdivided_star(int n);

/// Unbiased integer in [0, bound) from a 64-bit engine.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

struct IntervalModel {
  Graph graph;
  std::vector<Interval> intervals;
};

/// Intersection graph of n random closed intervals with pairwise distinct
/// integer endpoints in [0, 2n). Redraws until the graph is connected.
IntervalModel random_interval_model(int n, std::uint64_t seed);
Graph random_interval_graph(int n, std::uint64_t seed);

/// Random spanning tree plus every remaining pair independently with
/// probability p. Always connected.
Graph random_connected_graph(int n, double p, std::uint64_t seed);

inline constexpr double kDefaultEdgeProbability = 0.3;

/// Built-in example graphs: "figure1", "figure2", "figure3" and
/// "figure3_base" (figure3 without vertex 8).
Graph fixture(std::string_view name);
std::span<const std::string_view> fixture_names();

/// Family specs:
///   path:N  cycle:N  complete:N  star:N  subdivided_star:N
///   random_interval:N[:SEED]          (alias interval)
///   random_connected:N[:P[:SEED]]     (alias random)
///   fixture:NAME
/// `seed`, when given, overrides the SEED field. Throws GraphError on an
/// invalid spec.
Graph generate_family(std::string_view spec, std::optional<std::uint64_t> seed = std::nullopt);

/// True for the randomised families.
bool is_random_family(std::string_view spec);

}  // namespace spanlab
