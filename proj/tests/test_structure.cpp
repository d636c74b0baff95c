#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "catalog.hpp"
#include "spanlab/errors.hpp"
#include "spanlab/generators.hpp"
#include "spanlab/structure.hpp"

using namespace spanlab;

namespace {

std::vector<VertexSet> subsets(int n) {
  std::vector<VertexSet> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    VertexSet s;
    for (int v = 0; v < n; ++v) {
      if (m >> v & 1u) s.push_back(v);
    }
    out.push_back(s);
  }
  return out;
}

int component_count(const Graph& g, const VertexSet& removed) {
  std::vector<bool> gone(g.order(), false);
  for (Vertex v : removed) gone[v] = true;
  int count = 0;
  std::vector<bool> seen(g.order(), false);
  std::function<void(Vertex)> dfs = [&](Vertex v) {
    seen[v] = true;
    for (Vertex w : g.neighbors(v)) {
      if (!gone[w] && !seen[w]) dfs(w);
    }
  };
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!gone[v] && !seen[v]) {
      ++count;
      dfs(v);
    }
  }
  return count;
}

// Induced cycles of length >= 4 by checking every vertex subset.
bool has_long_induced_cycle(const Graph& g) {
  for (const VertexSet& s : subsets(g.order())) {
    if (s.size() < 4) continue;
    bool all_two = true;
    for (Vertex v : s) {
      int d = 0;
      for (Vertex w : s) d += g.adjacent(v, w);
      all_two = all_two && d == 2;
    }
    if (!all_two) continue;
    VertexSet rest;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!std::binary_search(s.begin(), s.end(), v)) rest.push_back(v);
    }
    if (component_count(g, rest) == 1) return true;
  }
  return false;
}

// For every arrangement of 2n endpoints (a vertex's first appearance opens
// its interval, the second closes it) that realises g, note which vertex
// closes first. That vertex's neighbours all contain its right endpoint, so
// it is simplicial. Empty result: not an interval graph.
std::set<Vertex> first_closing_vertices(const Graph& g) {
  const int n = g.order();
  std::vector<int> seq;
  std::vector<int> used(n, 0);
  std::set<Vertex> found;
  std::function<void()> rec = [&] {
    if (static_cast<int>(seq.size()) == 2 * n) {
      std::vector<int> l(n), r(n);
      for (int i = 2 * n - 1; i >= 0; --i) l[seq[i]] = i;
      for (int i = 0; i < 2 * n; ++i) r[seq[i]] = i;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if ((l[u] < r[v] && l[v] < r[u]) != g.adjacent(u, v)) return;
      found.insert(static_cast<Vertex>(std::min_element(r.begin(), r.end()) - r.begin()));
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] == 2) continue;
      ++used[v];
      seq.push_back(v);
      rec();
      seq.pop_back();
      --used[v];
    }
  };
  rec();
  return found;
}

std::vector<VertexSet> brute_maximal_cliques(const Graph& g) {
  std::vector<VertexSet> cliques;
  for (const VertexSet& s : subsets(g.order())) {
    if (!s.empty() && is_clique(g, s)) cliques.push_back(s);
  }
  std::vector<VertexSet> out;
  for (const auto& c : cliques) {
    bool maximal = true;
    for (const auto& d : cliques) {
      if (d.size() > c.size() && std::includes(d.begin(), d.end(), c.begin(), c.end())) maximal = false;
    }
    if (maximal) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_caterpillar(const Graph& t) {
  VertexSet spine;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) > 1) spine.push_back(v);
  }
  if (spine.size() <= 1) return true;
  const Graph s = induced_subgraph(t, spine);
  return s.max_degree() <= 2;  // a subtree of a tree with max degree 2 is a path
}

}  // namespace

TEST_SUITE("structure") {

TEST_CASE("chordality with certificates") {
  const auto c4 = is_chordal(cycle_graph(4));
  CHECK_FALSE(c4.chordal);
  CHECK(is_chordless_cycle(cycle_graph(4), c4.chordless_cycle));

  const auto f2 = is_chordal(fixture("figure2"));
  CHECK_FALSE(f2.chordal);
  CHECK(f2.chordless_cycle.size() == 4);

  const auto k4 = is_chordal(complete_graph(4));
  CHECK(k4.chordal);
  CHECK(is_perfect_elimination_order(complete_graph(4), k4.elimination_order));

  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      const auto r = is_chordal(g);
      CHECK(r.chordal == !has_long_induced_cycle(g));
      if (r.chordal) {
        CHECK(is_perfect_elimination_order(g, r.elimination_order));
      } else {
        CHECK(is_chordless_cycle(g, r.chordless_cycle));
      }
      auto order = lex_bfs_order(g);
      std::sort(order.begin(), order.end());
      for (int v = 0; v < n; ++v) CHECK(order[v] == v);
    }
  }
}

TEST_CASE("asteroidal triples") {
  const Triple evens{0, 2, 4};
  CHECK(is_asteroidal_triple(cycle_graph(6), evens));
  CHECK(find_asteroidal_triple(subdivided_star(3)) == Triple{4, 5, 6});
  CHECK_FALSE(find_asteroidal_triple(path_graph(6)));
  CHECK_FALSE(is_asteroidal_triple(path_graph(5), Triple{0, 2, 4}));
}

TEST_CASE("interval recognition against exhaustive representations") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      const auto ends = first_closing_vertices(g);
      const bool interval = !ends.empty();
      CHECK(is_interval(g) == interval);
      if (!interval) continue;
      // End-cliques: maximal cliques holding a vertex whose interval can close first.
      std::vector<VertexSet> expected;
      for (const VertexSet& c : brute_maximal_cliques(g)) {
        if (std::any_of(c.begin(), c.end(), [&](Vertex v) { return ends.count(v) > 0; })) {
          expected.push_back(c);
        }
      }
      auto got = end_cliques(g);
      std::sort(got.begin(), got.end());
      CHECK(got == expected);
    }
  }
}

TEST_CASE("interval certificates re-check") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      const auto cert = interval_certificate(g);
      CHECK(cert.is_interval == (is_chordal(g).chordal && !find_asteroidal_triple(g)));
      if (cert.is_interval) {
        CHECK(realizes(g, cert.representation));
      } else if (!cert.chordless_cycle.empty()) {
        CHECK(is_chordless_cycle(g, cert.chordless_cycle));
      } else {
        REQUIRE(cert.asteroidal_triple);
        CHECK(is_asteroidal_triple(g, *cert.asteroidal_triple));
      }
    }
  }
  CHECK_THROWS_AS(interval_certificate(path_graph(13)), CapacityError);
  CHECK_FALSE(interval_certificate(cycle_graph(20)).is_interval);
  CHECK_THROWS_AS(end_cliques(cycle_graph(4)), GraphError);
}

TEST_CASE("end-cliques of named graphs") {
  CHECK(end_cliques(path_graph(4)) == std::vector<VertexSet>{{0, 1}, {2, 3}});
  const Graph f = fixture("figure3_base");
  // Labels 1..7 are vertices 0..6: {1,2,4} and {3,5,6}.
  auto got = end_cliques(f);
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<VertexSet>{{0, 1, 3}, {2, 4, 5}});
}

TEST_CASE("maximal cliques against subset enumeration") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) CHECK(maximal_cliques(g) == brute_maximal_cliques(g));
  }
}

TEST_CASE("minimal cut sets against subset enumeration") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      std::vector<VertexSet> cuts;
      for (const VertexSet& s : subsets(n)) {
        if (static_cast<int>(s.size()) < n && component_count(g, s) > 1) cuts.push_back(s);
      }
      std::vector<VertexSet> minimal;
      for (const auto& c : cuts) {
        bool ok = true;
        for (const auto& d : cuts) {
          if (d.size() < c.size() && std::includes(c.begin(), c.end(), d.begin(), d.end())) ok = false;
        }
        if (ok) minimal.push_back(c);
      }
      const auto catalog = minimal_cut_sets(g, n);
      std::vector<VertexSet> got;
      for (const auto& cs : catalog.cut_sets) {
        got.push_back(cs.vertices);
        CHECK(cs.clique == is_clique(g, cs.vertices));
        CHECK(cs.components == components_without(g, cs.vertices));
      }
      std::sort(got.begin(), got.end());
      std::sort(minimal.begin(), minimal.end());
      CHECK(got == minimal);
    }
  }
}

TEST_CASE("figure 3 separating clique is not minimal") {
  const Graph g = fixture("figure3_base");
  const VertexSet s{1, 3, 4};  // labels 2, 4, 5
  CHECK(is_clique(g, s));
  CHECK(is_cut_set(g, s));
  CHECK(components_without(g, s) == std::vector<VertexSet>{{0}, {2, 5, 6}});
  const auto catalog = minimal_cut_sets(g);
  CHECK(catalog.graph_id == "Fn[j_");
  std::vector<VertexSet> got;
  for (const auto& cs : catalog.cut_sets) got.push_back(cs.vertices);
  CHECK(got == std::vector<VertexSet>{{1, 3}, {2, 4}});  // {2,4} and {3,5}
  CHECK(augment(g, s, Graph(1)).same_structure(fixture("figure3")));
}

TEST_CASE("lobes and augmentation") {
  const Graph g = fixture("figure3_base");
  const VertexSet s{1, 3};
  const auto lobes = s_lobes(g, s);
  REQUIRE(lobes.size() == 2);
  CHECK(lobes[0].labels() == std::vector<std::string>{"1", "2", "4"});
  CHECK(lobes[1].order() == 6);
  const VertexSet none{};
  CHECK(s_lobes(g, none).front() == g);

  const Graph a = augment(path_graph(3), VertexSet{1}, complete_graph(2));
  CHECK(a.order() == 5);
  CHECK(a.size() == 2 + 1 + 2);
  CHECK(a.labels() == std::vector<std::string>{"0", "1", "2", "3", "4"});
  CHECK(a.adjacent(1, 3));
  CHECK(a.adjacent(1, 4));
  CHECK_FALSE(a.adjacent(0, 3));
  CHECK_THROWS_AS(augment(path_graph(3), VertexSet{5}, Graph(1)), GraphError);
  CHECK_THROWS_AS(augment(path_graph(3), VertexSet{1}, Graph()), GraphError);
}

TEST_CASE("trees: S13-freeness is the caterpillar property") {
  const auto claw = find_induced_subdivided_claw(subdivided_star(3));
  REQUIRE(claw);
  CHECK((*claw)[0] == 0);
  CHECK_FALSE(find_induced_subdivided_claw(path_graph(7)));
  CHECK(is_tree(path_graph(1)));
  CHECK_FALSE(is_tree(cycle_graph(3)));
  for (int n = 1; n <= 9; ++n) {
    for (const Graph& t : testing::trees(n)) {
      CHECK(is_tree(t));
      const bool s13_free = !find_induced_subdivided_claw(t);
      CHECK(s13_free == is_caterpillar(t));
      CHECK(s13_free == is_interval(t));
    }
  }
}

}  // TEST_SUITE
