#include "catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace spanlab::testing {
namespace {

using Matrix = std::vector<std::vector<bool>>;

// Smallest upper-triangle bit string over all vertex permutations.
std::uint32_t canonical(const Matrix& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = UINT32_MAX;
  do {
    std::uint32_t code = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++bit) {
        if (adj[perm[i]][perm[j]]) code |= 1u << bit;
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph from_code(int n, std::uint32_t code) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (code >> bit & 1u) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

Matrix matrix_of(const Graph& g) {
  Matrix m(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

// Rooted-tree encoding (AHU); a tree is identified by the smaller encoding
// over its one or two centres.
std::string encode(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[v]) {
    if (w != parent) kids.push_back(encode(adj, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

std::string tree_code(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> degree(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] <= 1) layer.push_back(v);
  }
  int left = n;
  while (left > 2) {
    left -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int w : adj[v]) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (int c : layer) {
    std::string code = encode(adj, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

std::vector<Graph> connected_graphs(int n) {
  if (n <= 1) return {Graph(std::max(n, 0))};
  // Every connected graph has a vertex whose removal leaves it connected, so
  // extending each smaller graph by one vertex reaches all of them.
  std::set<std::uint32_t> codes;
  for (const Graph& small : connected_graphs(n - 1)) {
    Matrix base = matrix_of(small);
    for (auto& row : base) row.push_back(false);
    base.emplace_back(n, false);
    for (std::uint32_t nb = 1; nb < (1u << (n - 1)); ++nb) {
      Matrix m = base;
      for (int v = 0; v < n - 1; ++v) {
        if (nb >> v & 1u) m[v][n - 1] = m[n - 1][v] = true;
      }
      codes.insert(canonical(m));
    }
  }
  std::vector<Graph> out;
  for (auto code : codes) out.push_back(from_code(n, code));
  return out;
}

std::vector<Graph> trees(int n) {
  if (n <= 1) return {Graph(std::max(n, 0))};
  std::set<std::string> seen;
  std::vector<Graph> out;
  for (const Graph& small : trees(n - 1)) {
    for (int attach = 0; attach < n - 1; ++attach) {
      std::vector<Edge> edges = small.edges();
      edges.emplace_back(attach, n - 1);
      std::vector<std::vector<int>> adj(n);
      for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
      if (seen.insert(tree_code(adj)).second) {
        std::sort(edges.begin(), edges.end());
        out.emplace_back(n, edges);
      }
    }
  }
  return out;
}

}  // namespace spanlab::testing
