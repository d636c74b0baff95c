#include "spanlab/walks.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "spanlab/span.hpp"

namespace spanlab {

int safety_distance(const Graph& h, const WalkPair& w) {
  if (w.alice.empty() || w.alice.size() != w.bob.size()) {
    throw GraphError("walks must be non-empty and of equal length");
  }
  int best = kUnreachable;
  std::vector<std::vector<int>> rows(h.order());
  for (std::size_t t = 0; t < w.alice.size(); ++t) {
    const Vertex a = w.alice[t];
    const Vertex b = w.bob[t];
    if (a < 0 || a >= h.order() || b < 0 || b >= h.order()) {
      throw GraphError("walk position " + std::to_string(t) + " is not a vertex of the graph");
    }
    if (rows[a].empty()) rows[a] = bfs_distances(h, a);
    best = std::min(best, rows[a][b]);
  }
  return best;
}

namespace {

class Bitset {
 public:
  explicit Bitset(std::uint64_t bits) : words_((bits + 63) / 64, 0) {}
  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

 private:
  std::vector<std::uint64_t> words_;
};

// Encodes (local pair id, Alice's seen set, Bob's seen set).
struct StateCodec {
  int n;
  std::uint64_t masks;  // 2^n

  std::uint64_t encode(std::uint64_t local, std::uint64_t seen_a, std::uint64_t seen_b) const {
    return (local * masks + seen_a) * masks + seen_b;
  }
  std::uint64_t local(std::uint64_t s) const { return s / (masks * masks); }
  std::uint64_t seen_a(std::uint64_t s) const { return (s / masks) % masks; }
  std::uint64_t seen_b(std::uint64_t s) const { return s % masks; }
};

}  // namespace

std::optional<CoveringWalk> shortest_covering_walk(const ProductGraph& p) {
  const int n = p.base_order();
  if (n >= 31) throw CapacityError("covering-walk search supports at most 30 base vertices");
  const auto good = good_components(p);
  if (good.empty()) return std::nullopt;

  std::vector<int> local_of(static_cast<std::size_t>(n) * n, -1);
  std::vector<int> pair_of;
  for (const auto& c : good) {
    for (int pair : c) pair_of.push_back(pair);
  }
  std::sort(pair_of.begin(), pair_of.end());
  for (std::size_t i = 0; i < pair_of.size(); ++i) local_of[pair_of[i]] = static_cast<int>(i);

  const StateCodec codec{n, std::uint64_t{1} << n};
  const std::uint64_t full = codec.masks - 1;
  Bitset visited(pair_of.size() * codec.masks * codec.masks);

  auto successor = [&](std::uint64_t s, int next_pair) {
    return codec.encode(static_cast<std::uint64_t>(local_of[next_pair]),
                        codec.seen_a(s) | (std::uint64_t{1} << p.first(next_pair)),
                        codec.seen_b(s) | (std::uint64_t{1} << p.second(next_pair)));
  };
  auto is_goal = [&](std::uint64_t s) { return codec.seen_a(s) == full && codec.seen_b(s) == full; };

  std::vector<std::vector<std::uint64_t>> layers(1);
  for (std::size_t i = 0; i < pair_of.size(); ++i) {
    const int pair = pair_of[i];
    const std::uint64_t s = codec.encode(i, std::uint64_t{1} << p.first(pair),
                                         std::uint64_t{1} << p.second(pair));
    visited.set(s);
    layers[0].push_back(s);
  }

  while (std::none_of(layers.back().begin(), layers.back().end(), is_goal)) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t s : layers.back()) {
      for (int q : p.neighbors(pair_of[codec.local(s)])) {
        const std::uint64_t t = successor(s, q);
        if (!visited.test(t)) {
          visited.set(t);
          next.push_back(t);
        }
      }
    }
    // Unreachable for good components: their own walks cover everything.
    if (next.empty()) return std::nullopt;
    layers.push_back(std::move(next));
  }

  // Mark the states that lie on some shortest start-to-goal walk. A marked
  // successor of a layer-L state is necessarily in layer L+1 here.
  const std::size_t last = layers.size() - 1;
  Bitset on_shortest(pair_of.size() * codec.masks * codec.masks);
  for (std::uint64_t s : layers[last]) {
    if (is_goal(s)) on_shortest.set(s);
  }
  for (std::size_t layer = last; layer-- > 0;) {
    for (std::uint64_t s : layers[layer]) {
      for (int q : p.neighbors(pair_of[codec.local(s)])) {
        if (on_shortest.test(successor(s, q))) {
          on_shortest.set(s);
          break;
        }
      }
    }
  }

  for (auto& layer : layers) std::sort(layer.begin(), layer.end());

  CoveringWalk walk;
  walk.moves = static_cast<int>(last);
  std::uint64_t current = 0;
  // Layer 0 is sorted by local id, hence by pair index.
  for (std::uint64_t s : layers[0]) {
    if (on_shortest.test(s)) {
      current = s;
      break;
    }
  }
  walk.pairs.push_back(pair_of[codec.local(current)]);
  for (std::size_t layer = 0; layer < last; ++layer) {
    const auto& next_layer = layers[layer + 1];
    for (int q : p.neighbors(pair_of[codec.local(current)])) {
      const std::uint64_t t = successor(current, q);
      if (on_shortest.test(t) && std::binary_search(next_layer.begin(), next_layer.end(), t)) {
        current = t;
        walk.pairs.push_back(q);
        break;
      }
    }
  }
  return walk;
}

MinStepsResult min_steps(const Graph& h, Rule rule, int cap) {
  if (h.order() > cap) {
    std::ostringstream msg;
    msg << "graph has " << h.order() << " vertices, above the cap of " << cap
        << "; the covering search explores up to n^2 * 4^n states";
    throw CapacityError(msg.str());
  }
  const SpanResult span = vertex_span(h, rule);
  const ProductGraph level = safety_subgraph(build_product(h, rule), span.value);
  auto walk = shortest_covering_walk(level);
  if (!walk) throw GraphError("no good component at the span threshold");

  MinStepsResult result;
  result.span = span.value;
  result.moves = walk->moves;
  result.walks.rule = rule;
  for (int pair : walk->pairs) {
    result.walks.alice.push_back(level.first(pair));
    result.walks.bob.push_back(level.second(pair));
  }
  result.walks.safety = safety_distance(h, result.walks);
  return result;
}

WalkPair walk_pair_from_labels(const Graph& h, std::span<const std::string> alice,
                               std::span<const std::string> bob, Rule rule) {
  auto resolve = [&](std::span<const std::string> labels) {
    std::vector<Vertex> out;
    out.reserve(labels.size());
    for (const auto& l : labels) {
      auto v = h.find_label(l);
      if (!v) throw GraphError("unknown vertex label '" + l + "'");
      out.push_back(*v);
    }
    return out;
  };
  WalkPair w{resolve(alice), resolve(bob), rule, 0};
  if (!w.alice.empty() && w.alice.size() == w.bob.size()) w.safety = safety_distance(h, w);
  return w;
}

bool legal_step(const Graph& h, Rule rule, Vertex a, Vertex b, Vertex a2, Vertex b2) {
  const bool a_moves = h.adjacent(a, a2);
  const bool b_moves = h.adjacent(b, b2);
  const bool a_stays = a == a2;
  const bool b_stays = b == b2;
  if (!(a_moves || a_stays) || !(b_moves || b_stays)) return false;
  switch (rule) {
    case Rule::traditional: return true;
    case Rule::active: return a_moves && b_moves;
    case Rule::lazy: return a_moves != b_moves;
  }
  return false;
}

WalkValidation validate_walk_pair(const WalkPair& w, const Graph& h, int k) {
  WalkValidation report;
  report.safety = safety_distance(h, w);
  for (std::size_t t = 0; t + 1 < w.alice.size(); ++t) {
    if (!legal_step(h, w.rule, w.alice[t], w.bob[t], w.alice[t + 1], w.bob[t + 1])) {
      report.illegal_steps.push_back(t);
    }
  }
  auto surjective = [&](const std::vector<Vertex>& walk) {
    std::vector<bool> seen(h.order(), false);
    for (Vertex v : walk) seen[v] = true;
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  report.alice_surjective = surjective(w.alice);
  report.bob_surjective = surjective(w.bob);
  report.meets_threshold = report.safety >= k;
  return report;
}

WalkPair reroot(const WalkPair& w, std::size_t i, std::size_t j) {
  const std::size_t len = w.alice.size();
  if (len == 0 || w.bob.size() != len || i >= len || j >= len) {
    throw GraphError("re-rooting indices out of range");
  }
  std::vector<std::size_t> order;
  for (std::size_t t = i + 1; t-- > 0;) order.push_back(t);
  for (std::size_t t = 1; t < len; ++t) order.push_back(t);
  for (std::size_t t = len - 1; t-- > j;) order.push_back(t);

  WalkPair out;
  out.rule = w.rule;
  out.safety = w.safety;
  for (std::size_t t : order) {
    out.alice.push_back(w.alice[t]);
    out.bob.push_back(w.bob[t]);
  }
  return out;
}

}  // namespace spanlab
