#include "spanlab/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <set>

#include "spanlab/graph_io.hpp"

namespace spanlab {

using Mask = std::uint64_t;

namespace {

Mask bit(Vertex v) { return Mask{1} << v; }

std::vector<Mask> adjacency_masks(const Graph& g) {
  if (g.order() > 64) throw CapacityError("clique routines are limited to 64 vertices");
  std::vector<Mask> adj(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) adj[v] |= bit(w);
  }
  return adj;
}

VertexSet to_set(Mask m) {
  VertexSet out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// Component id of each vertex in G - removed; removed vertices get -1.
std::vector<int> component_ids(const Graph& g, const std::vector<bool>& removed) {
  std::vector<int> id(g.order(), -1);
  int next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (removed[s] || id[s] >= 0) continue;
    std::deque<Vertex> queue{s};
    id[s] = next;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (!removed[w] && id[w] < 0) {
          id[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return id;
}

std::vector<bool> closed_neighbourhood(const Graph& g, Vertex v) {
  std::vector<bool> in(g.order(), false);
  in[v] = true;
  for (Vertex w : g.neighbors(v)) in[w] = true;
  return in;
}

}  // namespace

bool is_clique(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_tree(const Graph& g) { return !g.empty() && g.size() == g.order() - 1 && is_connected(g); }

// ---------------------------------------------------------------------------

std::vector<Vertex> lex_bfs_order(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> label(n);
  std::vector<bool> numbered(n, false);
  std::vector<Vertex> order;
  order.reserve(n);
  for (int step = n; step > 0; --step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!numbered[v] && (pick < 0 || label[v] > label[pick])) pick = v;
    }
    numbered[pick] = true;
    order.push_back(pick);
    for (Vertex w : g.neighbors(pick)) {
      if (!numbered[w]) label[w].push_back(step);
    }
  }
  return order;
}

bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order) {
  std::vector<int> position(g.order(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
  for (Vertex v : order) {
    VertexSet later;
    for (Vertex w : g.neighbors(v)) {
      if (position[w] > position[v]) later.push_back(w);
    }
    if (!is_clique(g, later)) return false;
  }
  return true;
}

bool is_chordless_cycle(const Graph& g, std::span<const Vertex> cycle) {
  const std::size_t len = cycle.size();
  if (len < 4) return false;
  std::set<Vertex> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != len) return false;
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

namespace {

// Shortest a-b path in G - (N[v] \ {a, b}) closes a chordless cycle through
// v when a and b are non-adjacent neighbours of v.
std::optional<std::vector<Vertex>> chordless_cycle_through(const Graph& g, Vertex v, Vertex a,
                                                           Vertex b) {
  std::vector<bool> blocked = closed_neighbourhood(g, v);
  blocked[a] = blocked[b] = false;
  std::vector<Vertex> parent(g.order(), -1);
  std::deque<Vertex> queue{a};
  parent[a] = a;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (u == b) break;
    for (Vertex w : g.neighbors(u)) {
      if (!blocked[w] && parent[w] < 0) {
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  if (parent[b] < 0) return std::nullopt;
  std::vector<Vertex> cycle{v};
  std::vector<Vertex> path;
  for (Vertex x = b; x != a; x = parent[x]) path.push_back(x);
  path.push_back(a);
  std::reverse(path.begin(), path.end());
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

}  // namespace

ChordalityResult is_chordal(const Graph& g) {
  ChordalityResult result;
  auto order = lex_bfs_order(g);
  std::reverse(order.begin(), order.end());
  if (is_perfect_elimination_order(g, order)) {
    result.chordal = true;
    result.elimination_order = std::move(order);
    return result;
  }
  // Any chordless cycle v, a, ..., b passes through some v with
  // non-adjacent neighbours a and b, so this search cannot miss.
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        if (auto cycle = chordless_cycle_through(g, v, nb[i], nb[j])) {
          result.chordless_cycle = std::move(*cycle);
          return result;
        }
      }
    }
  }
  throw std::logic_error("elimination order failed but no chordless cycle exists");
}

bool is_asteroidal_triple(const Graph& g, const Triple& t) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (t[i] == t[j] || g.adjacent(t[i], t[j])) return false;
    }
  }
  for (int k = 0; k < 3; ++k) {
    const auto ids = component_ids(g, closed_neighbourhood(g, t[k]));
    const Vertex x = t[(k + 1) % 3];
    const Vertex y = t[(k + 2) % 3];
    if (ids[x] < 0 || ids[x] != ids[y]) return false;
  }
  return true;
}

std::optional<Triple> find_asteroidal_triple(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> avoid(n);
  for (Vertex v = 0; v < n; ++v) avoid[v] = component_ids(g, closed_neighbourhood(g, v));
  auto linked = [&](Vertex x, Vertex y, Vertex third) {
    return avoid[third][x] >= 0 && avoid[third][x] == avoid[third][y];
  };
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (g.adjacent(a, c) || g.adjacent(b, c)) continue;
        if (linked(a, b, c) && linked(a, c, b) && linked(b, c, a)) return Triple{a, b, c};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  const auto adj = adjacency_masks(g);
  std::vector<VertexSet> cliques;
  auto expand = [&](auto&& self, Mask r, Mask p, Mask x) -> void {
    if (!p && !x) {
      cliques.push_back(to_set(r));
      return;
    }
    // Pivot with the most neighbours in P.
    Vertex pivot = -1;
    int best = -1;
    for (Mask px = p | x; px; px &= px - 1) {
      const Vertex u = std::countr_zero(px);
      const int c = std::popcount(p & adj[u]);
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    for (Mask cand = p & ~adj[pivot]; cand; cand &= cand - 1) {
      const Vertex v = std::countr_zero(cand);
      self(self, r | bit(v), p & adj[v], x & adj[v]);
      p &= ~bit(v);
      x |= bit(v);
    }
  };
  if (g.order() > 0) {
    const Mask all = g.order() == 64 ? ~Mask{0} : bit(g.order()) - 1;
    expand(expand, 0, all, 0);
  }
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

namespace {

// Searches for an ordering of the cliques in which each vertex's cliques are
// consecutive, optionally forcing the first clique.
class CliquePathSearch {
 public:
  explicit CliquePathSearch(std::vector<Mask> cliques) : cliques_(std::move(cliques)) {}

  std::optional<std::vector<std::size_t>> run(std::optional<std::size_t> first = std::nullopt) {
    order_.clear();
    used_.assign(cliques_.size(), false);
    if (cliques_.empty()) return order_;
    if (first) {
      if (!place(*first, 0, 0)) return std::nullopt;
      return order_;
    }
    for (std::size_t c = 0; c < cliques_.size(); ++c) {
      if (place(c, 0, 0)) return order_;
    }
    return std::nullopt;
  }

 private:
  bool place(std::size_t c, Mask open, Mask closed) {
    const Mask k = cliques_[c];
    if (k & closed) return false;
    const Mask closing = open & ~k;
    used_[c] = true;
    Mask remaining = 0;
    for (std::size_t o = 0; o < cliques_.size(); ++o) {
      if (!used_[o]) remaining |= cliques_[o];
    }
    if (closing & remaining) {
      used_[c] = false;
      return false;
    }
    order_.push_back(c);
    if (order_.size() == cliques_.size()) return true;
    for (std::size_t next = 0; next < cliques_.size(); ++next) {
      if (!used_[next] && place(next, k, closed | closing)) return true;
    }
    order_.pop_back();
    used_[c] = false;
    return false;
  }

  std::vector<Mask> cliques_;
  std::vector<bool> used_;
  std::vector<std::size_t> order_;
};

std::vector<Mask> clique_masks(const std::vector<VertexSet>& cliques) {
  std::vector<Mask> out;
  for (const auto& c : cliques) {
    Mask m = 0;
    for (Vertex v : c) m |= bit(v);
    out.push_back(m);
  }
  return out;
}

void require_within_cap(const Graph& g, int cap, const char* what) {
  if (g.order() > cap) {
    throw CapacityError(std::string(what) + " needs at most " + std::to_string(cap) +
                        " vertices, graph has " + std::to_string(g.order()));
  }
}

}  // namespace

bool is_interval(const Graph& g) { return is_chordal(g).chordal && !find_asteroidal_triple(g); }

bool realizes(const Graph& g, std::span<const Interval> intervals) {
  if (static_cast<int>(intervals.size()) != g.order()) return false;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (intervals[u].left >= intervals[u].right) return false;
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const bool meet = intervals[u].left <= intervals[v].right &&
                        intervals[v].left <= intervals[u].right;
      if (meet != g.adjacent(u, v)) return false;
    }
  }
  return true;
}

IntervalCertificate interval_certificate(const Graph& g, int cap) {
  IntervalCertificate cert;
  auto chordal = is_chordal(g);
  if (!chordal.chordal) {
    cert.chordless_cycle = std::move(chordal.chordless_cycle);
    return cert;
  }
  if (auto at = find_asteroidal_triple(g)) {
    cert.asteroidal_triple = at;
    return cert;
  }
  cert.is_interval = true;
  require_within_cap(g, cap, "an interval representation");

  const auto cliques = maximal_cliques(g);
  auto order = CliquePathSearch(clique_masks(cliques)).run();
  if (!order) throw std::logic_error("interval graph without a consecutive clique ordering");

  const int n = g.order();
  std::vector<int> first(n, -1);
  std::vector<int> last(n, -1);
  for (std::size_t pos = 0; pos < order->size(); ++pos) {
    const auto& clique = cliques[(*order)[pos]];
    cert.clique_path.push_back(clique);
    for (Vertex v : clique) {
      if (first[v] < 0) first[v] = static_cast<int>(pos);
      last[v] = static_cast<int>(pos);
    }
  }
  // Slot p spans [p*stride, p*stride + 2n + 1]: left endpoints of vertices
  // opening at p come before right endpoints of vertices closing at p.
  const int stride = 2 * n + 2;
  cert.representation.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    cert.representation[v] = {first[v] * stride + 1 + v, last[v] * stride + n + 1 + v};
  }
  return cert;
}

std::vector<VertexSet> end_cliques(const Graph& g, int cap) {
  require_within_cap(g, cap, "end-clique search");
  if (!is_interval(g)) throw GraphError("end cliques are defined for interval graphs only");
  const auto cliques = maximal_cliques(g);
  const auto masks = clique_masks(cliques);
  CliquePathSearch search(masks);
  std::vector<VertexSet> out;
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    bool private_simplicial = false;
    for (Vertex v : cliques[c]) {
      int owners = 0;
      for (Mask m : masks) owners += (m & bit(v)) ? 1 : 0;
      if (owners == 1) private_simplicial = true;
    }
    if (private_simplicial && search.run(c)) out.push_back(cliques[c]);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<VertexSet> components_without(const Graph& g, std::span<const Vertex> s) {
  std::vector<bool> removed(g.order(), false);
  for (Vertex v : s) {
    if (v < 0 || v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " is not in the graph");
    removed[v] = true;
  }
  const auto ids = component_ids(g, removed);
  const int count = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
  std::vector<VertexSet> comps(count);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (ids[v] >= 0) comps[ids[v]].push_back(v);
  }
  return comps;
}

bool is_cut_set(const Graph& g, std::span<const Vertex> s) {
  return components_without(g, s).size() > connected_components(g).size();
}

CutSetCatalog minimal_cut_sets(const Graph& g, int size_cap) {
  CutSetCatalog catalog;
  catalog.graph_id = to_graph6(g);
  catalog.size_cap = size_cap;
  const int n = g.order();
  std::set<VertexSet> separating;

  auto has_separating_subset = [&](const VertexSet& s) {
    const std::size_t k = s.size();
    for (std::uint64_t sub = 1; sub + 1 < (std::uint64_t{1} << k); ++sub) {
      VertexSet part;
      for (std::size_t i = 0; i < k; ++i) {
        if ((sub >> i) & 1U) part.push_back(s[i]);
      }
      if (separating.contains(part)) return true;
    }
    return false;
  };

  for (int size = 1; size <= std::min(size_cap, n); ++size) {
    // Lexicographic combinations of `size` vertices.
    VertexSet s(size);
    for (int i = 0; i < size; ++i) s[i] = i;
    while (true) {
      auto comps = components_without(g, s);
      if (comps.size() > connected_components(g).size()) {
        if (!has_separating_subset(s)) {
          catalog.cut_sets.push_back(CutSet{s, std::move(comps), is_clique(g, s)});
        }
        separating.insert(s);
      }
      int i = size - 1;
      while (i >= 0 && s[i] == n - size + i) --i;
      if (i < 0) break;
      ++s[i];
      for (int j = i + 1; j < size; ++j) s[j] = s[j - 1] + 1;
    }
  }
  return catalog;
}

std::vector<Graph> s_lobes(const Graph& g, std::span<const Vertex> s) {
  const auto comps = components_without(g, s);
  if (comps.size() <= 1) return {g};
  std::vector<Graph> lobes;
  for (const auto& c : comps) {
    VertexSet members(s.begin(), s.end());
    members.insert(members.end(), c.begin(), c.end());
    lobes.push_back(induced_subgraph(g, members));
  }
  return lobes;
}

Graph augment(const Graph& g, std::span<const Vertex> s, const Graph& h) {
  if (h.empty()) throw GraphError("augmentation needs a non-empty attached graph");
  const int ng = g.order();
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + ng, v + ng);
  VertexSet attach(s.begin(), s.end());
  std::sort(attach.begin(), attach.end());
  attach.erase(std::unique(attach.begin(), attach.end()), attach.end());
  for (Vertex x : attach) {
    if (x < 0 || x >= ng) throw GraphError("vertex " + std::to_string(x) + " is not in the graph");
    for (Vertex y = 0; y < h.order(); ++y) edges.emplace_back(x, y + ng);
  }
  std::set<std::string_view> g_labels(g.labels().begin(), g.labels().end());
  const bool disjoint = std::none_of(h.labels().begin(), h.labels().end(),
                                     [&](const std::string& l) { return g_labels.contains(l); });
  if (!disjoint) return Graph(ng + h.order(), edges);
  std::vector<std::string> labels = g.labels();
  labels.insert(labels.end(), h.labels().begin(), h.labels().end());
  return Graph(std::move(labels), edges);
}

std::optional<std::array<Vertex, 7>> find_induced_subdivided_claw(const Graph& g) {
  for (Vertex x = 0; x < g.order(); ++x) {
    auto nb = g.neighbors(x);
    const std::size_t d = nb.size();
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        for (std::size_t k = j + 1; k < d; ++k) {
          const std::array<Vertex, 3> a{nb[i], nb[j], nb[k]};
          if (g.adjacent(a[0], a[1]) || g.adjacent(a[0], a[2]) || g.adjacent(a[1], a[2])) {
            continue;
          }
          // Candidate b_i: neighbour of a_i only, among x and the a's.
          std::array<std::vector<Vertex>, 3> cand;
          for (int t = 0; t < 3; ++t) {
            for (Vertex b : g.neighbors(a[t])) {
              if (b == x || g.adjacent(b, x)) continue;
              if (g.adjacent(b, a[(t + 1) % 3]) || g.adjacent(b, a[(t + 2) % 3])) continue;
              cand[t].push_back(b);
            }
          }
          for (Vertex b0 : cand[0]) {
            for (Vertex b1 : cand[1]) {
              if (b1 == b0 || g.adjacent(b0, b1)) continue;
              for (Vertex b2 : cand[2]) {
                if (b2 == b0 || b2 == b1 || g.adjacent(b0, b2) || g.adjacent(b1, b2)) continue;
                return std::array<Vertex, 7>{x, a[0], a[1], a[2], b0, b1, b2};
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace spanlab
