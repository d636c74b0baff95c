#include "spanlab/generators.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <string>

namespace spanlab {
namespace {

void require_positive(int n, const char* family) {
  if (n < 1) throw GraphError(std::string(family) + " needs at least one vertex");
}

Graph labelled(std::vector<std::string> labels, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> e(edges.begin(), edges.end());
  return Graph(std::move(labels), e);
}

}  // namespace

Graph path_graph(int n) {
  require_positive(n, "path");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  require_positive(n, "complete graph");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  if (leaves < 0) throw GraphError("star needs a non-negative number of leaves");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph subdivided_star(int n) {
  if (n < 0) throw GraphError("subdivided star needs a non-negative arm count");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= n; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, n + i);
  }
  return Graph(2 * n + 1, edges);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below needs a positive bound");
  const std::uint64_t limit = rng.max() - (rng.max() % bound + 1) % bound;
  std::uint64_t x = rng();
  while (x > limit) x = rng();
  return x % bound;
}

namespace {

bool bernoulli(std::mt19937_64& rng, double p) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p;
}

}  // namespace

IntervalModel random_interval_model(int n, std::uint64_t seed) {
  require_positive(n, "random interval graph");
  std::mt19937_64 rng(seed);
  std::vector<int> points(2 * n);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (int i = 0; i < 2 * n; ++i) points[i] = i;
    for (int i = 2 * n - 1; i > 0; --i) {
      std::swap(points[i], points[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
    }
    std::vector<Interval> intervals(n);
    for (int v = 0; v < n; ++v) {
      intervals[v] = {std::min(points[2 * v], points[2 * v + 1]),
                      std::max(points[2 * v], points[2 * v + 1])};
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (intervals[u].left <= intervals[v].right && intervals[v].left <= intervals[u].right) {
          edges.emplace_back(u, v);
        }
      }
    }
    Graph g(n, edges);
    if (is_connected(g)) return {std::move(g), std::move(intervals)};
  }
  throw std::runtime_error("could not draw a connected interval graph");
}

Graph random_interval_graph(int n, std::uint64_t seed) { return random_interval_model(n, seed).graph; }

Graph random_connected_graph(int n, double p, std::uint64_t seed) {
  require_positive(n, "random connected graph");
  if (!(p >= 0.0 && p <= 1.0)) throw GraphError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[i], order[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
  }
  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  std::vector<Edge> edges;
  auto add = [&](Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    present[u][v] = true;
    edges.emplace_back(u, v);
  };
  for (int i = 1; i < n; ++i) add(order[i], order[uniform_below(rng, static_cast<std::uint64_t>(i))]);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!present[u][v] && bernoulli(rng, p)) add(u, v);
    }
  }
  std::sort(edges.begin(), edges.end());
  return Graph(n, edges);
}

namespace {

constexpr std::array<std::string_view, 4> kFixtures{"figure1", "figure2", "figure3", "figure3_base"};

// Path p0-p1-p2-p3 with L on all four path vertices and R on p1, p2. The
// edge p1-p2 cannot be crossed while keeping distance 2.
Graph figure1() {
  return labelled({"p0", "p1", "p2", "p3", "L", "R"},
                  {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}, {5, 1}, {5, 2}});
}

// Induced 4-cycle a0-a1-a2-a3 joined to hub h; h also sees the triangle
// h-b1-b2, and t hangs off b1 and b2. Non-chordal, no universal vertex.
Graph figure2() {
  return labelled({"a0", "a1", "a2", "a3", "h", "b1", "b2", "t"},
                  {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3},
                   {4, 5}, {4, 6}, {5, 6}, {7, 5}, {7, 6}});
}

// Interval graph on 1..7; S = {2, 4, 5} is a separating clique that is not a
// minimal cut set ({2, 4} already isolates 1).
Graph figure3_base() {
  return labelled({"1", "2", "3", "4", "5", "6", "7"},
                  {{0, 1}, {1, 2}, {2, 5}, {5, 4}, {4, 3}, {3, 0}, {3, 1}, {1, 4},
                   {4, 2}, {2, 3}, {3, 6}, {6, 1}, {6, 2}});
}

// figure3_base augmented at {2, 4, 5} with the single vertex 8.
Graph figure3() {
  return labelled({"1", "2", "3", "4", "5", "6", "7", "8"},
                  {{0, 1}, {1, 2}, {2, 5}, {5, 4}, {4, 3}, {3, 0}, {3, 1}, {1, 4},
                   {4, 2}, {2, 3}, {3, 6}, {6, 1}, {6, 2}, {7, 1}, {7, 3}, {7, 4}});
}

std::vector<std::string_view> split(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t colon = spec.find(':', start);
    parts.push_back(spec.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view text, std::string_view spec) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw GraphError("bad number '" + std::string(text) + "' in family spec '" + std::string(spec) + "'");
  }
  return value;
}

}  // namespace

Graph fixture(std::string_view name) {
  if (name == "figure1") return figure1();
  if (name == "figure2") return figure2();
  if (name == "figure3") return figure3();
  if (name == "figure3_base") return figure3_base();
  throw GraphError("unknown fixture '" + std::string(name) + "'");
}

std::span<const std::string_view> fixture_names() { return kFixtures; }

bool is_random_family(std::string_view spec) {
  const auto name = split(spec).front();
  return name == "random_interval" || name == "interval" || name == "random_connected" ||
         name == "random";
}

Graph generate_family(std::string_view spec, std::optional<std::uint64_t> seed) {
  const auto parts = split(spec);
  const std::string_view name = parts.front();
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() - 1 < lo || parts.size() - 1 > hi) {
      throw GraphError("family spec '" + std::string(spec) + "' has the wrong number of fields");
    }
  };
  auto size_arg = [&] { return parse_number<int>(parts[1], spec); };

  if (name == "fixture") {
    arity(1, 1);
    return fixture(parts[1]);
  }
  using Builder = Graph (*)(int);
  const std::array<std::pair<std::string_view, Builder>, 5> sized{{
      {"path", path_graph},
      {"cycle", cycle_graph},
      {"complete", complete_graph},
      {"star", star_graph},
      {"subdivided_star", subdivided_star},
  }};
  for (auto [family, build] : sized) {
    if (name == family) {
      arity(1, 1);
      return build(size_arg());
    }
  }
  if (name == "random_interval" || name == "interval") {
    arity(1, 2);
    std::uint64_t s = parts.size() > 2 ? parse_number<std::uint64_t>(parts[2], spec) : 0;
    return random_interval_graph(size_arg(), seed.value_or(s));
  }
  if (name == "random_connected" || name == "random") {
    arity(1, 3);
    double p = kDefaultEdgeProbability;
    if (parts.size() > 2) {
      try {
        std::size_t used = 0;
        p = std::stod(std::string(parts[2]), &used);
        if (used != parts[2].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw GraphError("bad probability '" + std::string(parts[2]) + "' in family spec");
      }
    }
    std::uint64_t s = parts.size() > 3 ? parse_number<std::uint64_t>(parts[3], spec) : 0;
    return random_connected_graph(size_arg(), p, seed.value_or(s));
  }
  throw GraphError("unknown graph family '" + std::string(name) + "'");
}

}  // namespace spanlab
