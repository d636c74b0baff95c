#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spanlab/graph.hpp"

namespace spanlab {

/// Sorted vertex set.
using VertexSet = std::vector<Vertex>;

bool is_clique(const Graph& g, std::span<const Vertex> s);
bool is_tree(const Graph& g);

// ---------------------------------------------------------------------------
// Chordality and asteroidal triples

/// Lexicographic breadth-first search; visit order, ties broken by index.
std::vector<Vertex> lex_bfs_order(const Graph& g);

/// Every vertex's neighbours later in `order` form a clique.
bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order);

/// Induced cycle of length >= 4, listed in cycle order.
bool is_chordless_cycle(const Graph& g, std::span<const Vertex> cycle);

struct ChordalityResult {
  bool chordal = false;
  std::vector<Vertex> elimination_order;  // set when chordal
  std::vector<Vertex> chordless_cycle;    // set when not chordal
};

ChordalityResult is_chordal(const Graph& g);

using Triple = std::array<Vertex, 3>;

/// Pairwise non-adjacent, and each two joined by a path avoiding the closed
/// neighbourhood of the third.
bool is_asteroidal_triple(const Graph& g, const Triple& t);

/// Brute force over independent triples, lexicographically first hit.
std::optional<Triple> find_asteroidal_triple(const Graph& g);

// ---------------------------------------------------------------------------
// Interval graphs

inline constexpr int kDefaultRepresentationCap = 12;

struct Interval {
  int left = 0;
  int right = 0;
};

struct IntervalCertificate {
  bool is_interval = false;
  std::vector<Interval> representation;  // per vertex, distinct endpoints
  std::vector<VertexSet> clique_path;    // maximal cliques in representation order
  std::vector<Vertex> chordless_cycle;   // witness when not chordal
  std::optional<Triple> asteroidal_triple;
};

/// Chordal and free of asteroidal triples.
bool is_interval(const Graph& g);

/// Interval flag plus either a representation or a re-checkable witness.
/// A positive certificate for more than `cap` vertices throws CapacityError.
IntervalCertificate interval_certificate(const Graph& g, int cap = kDefaultRepresentationCap);

/// Intervals intersect exactly when the vertices are adjacent.
bool realizes(const Graph& g, std::span<const Interval> intervals);

/// Bron-Kerbosch with pivoting; cliques sorted, list in lexicographic order.
/// Limited to 64 vertices.
std::vector<VertexSet> maximal_cliques(const Graph& g);

/// Maximal cliques that can open (equivalently close) an ordering in which
/// every vertex's cliques are consecutive, and that hold a simplicial vertex
/// belonging to no other maximal clique. Throws GraphError for non-interval
/// input and CapacityError above `cap` vertices.
std::vector<VertexSet> end_cliques(const Graph& g, int cap = kDefaultRepresentationCap);

// ---------------------------------------------------------------------------
// Cut sets, lobes, augmentation

inline constexpr int kDefaultCutSetCap = 4;

/// Components of G - S, in original vertex ids.
std::vector<VertexSet> components_without(const Graph& g, std::span<const Vertex> s);

/// G - S has more components than G.
bool is_cut_set(const Graph& g, std::span<const Vertex> s);

struct CutSet {
  VertexSet vertices;
  std::vector<VertexSet> components;  // of G - S
  bool clique = false;
};

struct CutSetCatalog {
  std::string graph_id;  // graph6
  int size_cap = kDefaultCutSetCap;
  std::vector<CutSet> cut_sets;  // by size, then lexicographic
};

/// All inclusion-minimal cut sets with at most `size_cap` vertices.
CutSetCatalog minimal_cut_sets(const Graph& g, int size_cap = kDefaultCutSetCap);

/// One lobe G[S ∪ C] per component C of G - S, labels carried over from g.
/// When S does not separate g the single lobe is g itself.
std::vector<Graph> s_lobes(const Graph& g, std::span<const Vertex> s);

/// aug(G, S, H): disjoint union of g and h plus every edge between S and
/// V(h). Vertices of h follow those of g; labels are kept when disjoint,
/// otherwise all vertices are relabelled by index.
Graph augment(const Graph& g, std::span<const Vertex> s, const Graph& h);

/// Induced subdivided claw S_{1,3}, returned as {centre, a1, a2, a3, b1, b2, b3}
/// with a_i b_i edges.
std::optional<std::array<Vertex, 7>> find_induced_subdivided_claw(const Graph& g);

}  // namespace spanlab
