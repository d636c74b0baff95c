#include "spanlab/verification.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "spanlab/errors.hpp"
#include "spanlab/generators.hpp"
#include "spanlab/graph_io.hpp"

namespace spanlab {
namespace {

// ---------------------------------------------------------------------------
// Oracle plumbing

constexpr int kFar = std::numeric_limits<int>::max() / 4;

struct OracleGraph {
  int n = 0;
  std::vector<std::vector<bool>> adj;
  std::vector<std::vector<int>> dist;
  std::vector<std::vector<int>> edge_id;  // -1 when not an edge
  int edges = 0;
};

OracleGraph prepare(const Graph& h, int cap) {
  if (h.empty()) throw GraphError("span is undefined for the empty graph");
  if (h.order() > cap) {
    throw CapacityError("brute-force oracle is limited to " + std::to_string(cap) +
                        " vertices; graph has " + std::to_string(h.order()));
  }
  OracleGraph o;
  o.n = h.order();
  o.adj.assign(o.n, std::vector<bool>(o.n, false));
  o.dist.assign(o.n, std::vector<int>(o.n, kFar));
  o.edge_id.assign(o.n, std::vector<int>(o.n, -1));
  for (Vertex u = 0; u < o.n; ++u) {
    o.dist[u][u] = 0;
    for (Vertex v = u + 1; v < o.n; ++v) {
      if (!h.adjacent(u, v)) continue;
      o.adj[u][v] = o.adj[v][u] = true;
      o.dist[u][v] = o.dist[v][u] = 1;
      o.edge_id[u][v] = o.edge_id[v][u] = o.edges++;
    }
  }
  for (int m = 0; m < o.n; ++m) {
    for (int i = 0; i < o.n; ++i) {
      for (int j = 0; j < o.n; ++j) {
        o.dist[i][j] = std::min(o.dist[i][j], o.dist[i][m] + o.dist[m][j]);
      }
    }
  }
  for (int i = 0; i < o.n; ++i) {
    for (int j = 0; j < o.n; ++j) {
      if (o.dist[i][j] >= kFar) throw GraphError("span is undefined for a disconnected graph");
    }
  }
  return o;
}

// Each walk is a weak homomorphism of a path: a player either stays or
// crosses an edge. The rule then restricts who moves in one time step.
bool allowed(const OracleGraph& o, Rule rule, int a, int b, int a2, int b2) {
  const bool moved_a = a != a2;
  const bool moved_b = b != b2;
  if (moved_a && !o.adj[a][a2]) return false;
  if (moved_b && !o.adj[b][b2]) return false;
  if (!moved_a && !moved_b) return false;
  switch (rule) {
    case Rule::traditional: return true;
    case Rule::active: return moved_a && moved_b;
    case Rule::lazy: return moved_a != moved_b;
  }
  return false;
}

int diameter(const OracleGraph& o) {
  int d = 0;
  for (const auto& row : o.dist) d = std::max(d, *std::max_element(row.begin(), row.end()));
  return d;
}

// Depth-first reachability over (alice, bob, seen by alice, seen by bob),
// started from every pair at distance >= k.
bool vertex_cover_reachable(const OracleGraph& o, Rule rule, int k) {
  const int n = o.n;
  const std::uint32_t full = (1u << n) - 1;
  const std::size_t masks = std::size_t{1} << n;
  auto encode = [&](int a, int b, std::uint32_t ma, std::uint32_t mb) {
    return ((static_cast<std::size_t>(a) * n + b) * masks + ma) * masks + mb;
  };
  std::vector<bool> seen(static_cast<std::size_t>(n) * n * masks * masks, false);
  struct State {
    int a, b;
    std::uint32_t ma, mb;
  };
  std::vector<State> stack;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (o.dist[a][b] < k) continue;
      State s{a, b, 1u << a, 1u << b};
      const auto key = encode(s.a, s.b, s.ma, s.mb);
      if (seen[key]) continue;
      seen[key] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const State s = stack.back();
    stack.pop_back();
    if (s.ma == full && s.mb == full) return true;
    for (int a2 = 0; a2 < n; ++a2) {
      for (int b2 = 0; b2 < n; ++b2) {
        if (o.dist[a2][b2] < k || !allowed(o, rule, s.a, s.b, a2, b2)) continue;
        State t{a2, b2, s.ma | (1u << a2), s.mb | (1u << b2)};
        const auto key = encode(t.a, t.b, t.ma, t.mb);
        if (seen[key]) continue;
        seen[key] = true;
        stack.push_back(t);
      }
    }
  }
  return false;
}

// Edge covers would need 2^|E| masks per coordinate, so track per pair the
// union of edges traversed on any walk reaching it. Every step can be undone
// by the reverse step (same rule, same distances), so whatever was covered on
// the way to a pair stays available from there and the union is exact.
bool edge_cover_reachable(const OracleGraph& o, Rule rule, int k) {
  const int n = o.n;
  const std::uint64_t full = o.edges == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << o.edges) - 1;
  std::vector<bool> settled(static_cast<std::size_t>(n) * n, false);
  for (int a0 = 0; a0 < n; ++a0) {
    for (int b0 = 0; b0 < n; ++b0) {
      if (o.dist[a0][b0] < k || settled[a0 * n + b0]) continue;
      std::vector<std::uint64_t> cover_a(n * n, 0), cover_b(n * n, 0);
      std::vector<bool> reached(n * n, false), queued(n * n, false);
      std::vector<int> work{a0 * n + b0};
      reached[a0 * n + b0] = queued[a0 * n + b0] = true;
      while (!work.empty()) {
        const int cur = work.back();
        work.pop_back();
        queued[cur] = false;
        const int a = cur / n, b = cur % n;
        for (int a2 = 0; a2 < n; ++a2) {
          for (int b2 = 0; b2 < n; ++b2) {
            if (o.dist[a2][b2] < k || !allowed(o, rule, a, b, a2, b2)) continue;
            std::uint64_t ea = cover_a[cur], eb = cover_b[cur];
            if (a2 != a) ea |= std::uint64_t{1} << o.edge_id[a][a2];
            if (b2 != b) eb |= std::uint64_t{1} << o.edge_id[b][b2];
            const int next = a2 * n + b2;
            const bool grows = !reached[next] || (ea & ~cover_a[next]) || (eb & ~cover_b[next]);
            if (!grows) continue;
            reached[next] = true;
            cover_a[next] |= ea;
            cover_b[next] |= eb;
            if (!queued[next]) {
              queued[next] = true;
              work.push_back(next);
            }
          }
        }
      }
      for (int p = 0; p < n * n; ++p) {
        if (!reached[p]) continue;
        settled[p] = true;
        if (cover_a[p] == full && cover_b[p] == full) return true;
      }
    }
  }
  return false;
}

}  // namespace

int brute_force_span(const Graph& h, Rule rule, SpanKind kind, int cap) {
  const OracleGraph o = prepare(h, cap);
  if (o.n == 1) return 0;
  if (kind == SpanKind::edge && o.edges > 64) {
    throw CapacityError("edge oracle tracks at most 64 edges");
  }
  for (int k = diameter(o); k > 0; --k) {
    const bool ok = kind == SpanKind::vertex ? vertex_cover_reachable(o, rule, k)
                                             : edge_cover_reachable(o, rule, k);
    if (ok) return k;
  }
  return 0;
}

namespace {

class MoveSearch {
 public:
  MoveSearch(const OracleGraph& o, Rule rule, int k) : o_(o), rule_(rule), k_(k) {
    full_ = (1u << o.n) - 1;
  }

  bool solvable_in(int budget) {
    failed_.clear();
    for (int a = 0; a < o_.n; ++a) {
      for (int b = 0; b < o_.n; ++b) {
        if (o_.dist[a][b] >= k_ && search(a, b, 1u << a, 1u << b, budget)) return true;
      }
    }
    return false;
  }

 private:
  int lower_bound(std::uint32_t ma, std::uint32_t mb) const {
    const int ua = std::popcount(full_ & ~ma);
    const int ub = std::popcount(full_ & ~mb);
    // A step reveals at most one new vertex per player, and in the lazy rule
    // only one player steps.
    return rule_ == Rule::lazy ? ua + ub : std::max(ua, ub);
  }

  std::uint64_t key(int a, int b, std::uint32_t ma, std::uint32_t mb) const {
    return (((static_cast<std::uint64_t>(a) * o_.n + b) << 20 | ma) << 20) | mb;
  }

  bool search(int a, int b, std::uint32_t ma, std::uint32_t mb, int budget) {
    if (ma == full_ && mb == full_) return true;
    if (lower_bound(ma, mb) > budget) return false;
    // A state that already failed with at least this much budget fails again.
    const auto id = key(a, b, ma, mb);
    if (auto it = failed_.find(id); it != failed_.end() && it->second >= budget) return false;
    for (int a2 = 0; a2 < o_.n; ++a2) {
      for (int b2 = 0; b2 < o_.n; ++b2) {
        if (o_.dist[a2][b2] < k_ || !allowed(o_, rule_, a, b, a2, b2)) continue;
        if (search(a2, b2, ma | (1u << a2), mb | (1u << b2), budget - 1)) return true;
      }
    }
    failed_[id] = budget;
    return false;
  }

  const OracleGraph& o_;
  Rule rule_;
  int k_;
  std::uint32_t full_ = 0;
  std::unordered_map<std::uint64_t, int> failed_;
};

}  // namespace

std::optional<int> brute_force_min_moves(const Graph& h, Rule rule, int k, int cap) {
  const OracleGraph o = prepare(h, cap);
  if (!vertex_cover_reachable(o, rule, k)) return std::nullopt;
  MoveSearch search(o, rule, k);
  for (int budget = 0;; ++budget) {
    if (search.solvable_in(budget)) return budget;
  }
}

// ---------------------------------------------------------------------------
// Theorem checks

std::string_view to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::violated: return "violated";
    case CheckStatus::not_applicable: return "not-applicable";
  }
  return "?";
}

bool TheoremReport::has_violation() const noexcept {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == CheckStatus::violated; });
}

namespace {

void require_connected(const Graph& h) {
  if (h.empty() || !is_connected(h)) throw GraphError("theorem checks need a connected graph");
}

std::string set_text(const Graph& g, std::span<const Vertex> s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += g.label(s[i]);
  }
  return out + "}";
}

class ReportBuilder {
 public:
  explicit ReportBuilder(const Graph& h) : id_(to_graph6(h)) { report_.graph_id = id_; }

  void add(std::string name, CheckStatus status, std::string detail, std::string witness = {}) {
    if (status == CheckStatus::violated) witness = "graph6=" + id_ + (witness.empty() ? "" : " " + witness);
    else witness.clear();
    report_.checks.push_back({std::move(name), status, std::move(detail), std::move(witness)});
  }

  void expect(std::string name, bool ok, std::string detail, std::string witness = {}) {
    add(std::move(name), ok ? CheckStatus::holds : CheckStatus::violated, std::move(detail),
        std::move(witness));
  }

  TheoremReport take() { return std::move(report_); }

 private:
  std::string id_;
  TheoremReport report_;
};

int strong_span(const Graph& g) { return vertex_span(g, Rule::traditional).value; }

std::vector<Graph> default_attachments() { return {complete_graph(1), complete_graph(2), path_graph(3)}; }

}  // namespace

TheoremReport check_span_inequalities(const Graph& h) {
  require_connected(h);
  const Metrics m = metrics(h);
  const SpanReport spans = span_report(h);
  ReportBuilder out(h);

  for (Rule rule : kAllRules) {
    const std::string r(to_string(rule));
    const int sv = spans.value(rule, SpanKind::vertex);
    const int se = spans.value(rule, SpanKind::edge);
    std::ostringstream values;
    values << "vertex=" << sv << " edge=" << se << " radius=" << m.radius;
    out.expect(r + ".chain", 0 <= se && se <= sv && sv <= m.radius,
               "0 <= edge <= vertex <= radius; " + values.str(), values.str());
    out.expect(r + ".difference", sv - se <= 1, "vertex - edge <= 1; " + values.str(), values.str());

    const std::string girth_name = r + ".girth";
    if (!m.girth) {
      out.add(girth_name, CheckStatus::not_applicable, "acyclic");
      continue;
    }
    const int bound = rule == Rule::traditional ? *m.girth / 2 : *m.girth / 2 - 1;
    std::ostringstream detail;
    detail << "vertex=" << sv << " girth=" << *m.girth << " bound=" << bound;
    if (bound <= 0) {
      out.add(girth_name, CheckStatus::holds, detail.str() + " (vacuous)");
    } else {
      out.expect(girth_name, sv >= bound, detail.str(), detail.str());
    }
  }

  const std::string nontrivial = "traditional.nontrivial";
  if (h.order() < 2) {
    out.add(nontrivial, CheckStatus::not_applicable, "single vertex");
  } else {
    const int sv = spans.value(Rule::traditional, SpanKind::vertex);
    out.expect(nontrivial, sv >= 1, "vertex=" + std::to_string(sv), "vertex=" + std::to_string(sv));
  }
  return out.take();
}

TheoremReport check_span1_structure(const Graph& h, int cut_set_cap) {
  require_connected(h);
  ReportBuilder out(h);
  const int n = h.order();
  const int span = n >= 2 ? strong_span(h) : 0;
  const bool no_universal = h.max_degree() < n - 1;

  const char* names[] = {"cut_set_clique", "lobe_span", "join_condition"};
  if (span != 1) {
    for (const char* name : names) {
      out.add(name, CheckStatus::not_applicable, "strong vertex span " + std::to_string(span));
    }
    return out.take();
  }

  const CutSetCatalog catalog = minimal_cut_sets(h, cut_set_cap);
  const std::string scope = std::to_string(catalog.cut_sets.size()) + " minimal cut sets of size <= " +
                            std::to_string(cut_set_cap);

  // S-lobes need only span 1; the other two lemmas also need no universal vertex.
  {
    std::string failure;
    for (const CutSet& cs : catalog.cut_sets) {
      const std::size_t k = cs.components.size();
      if (k > 16) continue;
      for (std::uint32_t pick = 1; pick < (1u << k) && failure.empty(); ++pick) {
        VertexSet vs = cs.vertices;
        for (std::size_t i = 0; i < k; ++i) {
          if (pick >> i & 1u) vs.insert(vs.end(), cs.components[i].begin(), cs.components[i].end());
        }
        std::sort(vs.begin(), vs.end());
        const Graph lobes = induced_subgraph(h, vs);
        const int s = strong_span(lobes);
        if (s != 1) {
          failure = "S=" + set_text(h, cs.vertices) + " union=" + set_text(h, vs) +
                    " span=" + std::to_string(s);
        }
      }
      if (!failure.empty()) break;
    }
    out.expect("lobe_span", failure.empty(), "every union of S-lobes has span 1; " + scope, failure);
  }

  if (!no_universal) {
    out.add("cut_set_clique", CheckStatus::not_applicable, "universal vertex present");
    out.add("join_condition", CheckStatus::not_applicable, "universal vertex present");
    return out.take();
  }

  {
    std::string failure;
    for (const CutSet& cs : catalog.cut_sets) {
      if (!is_clique(h, cs.vertices)) {
        failure = "S=" + set_text(h, cs.vertices);
        break;
      }
    }
    out.expect("cut_set_clique", failure.empty(), "minimal cut sets are cliques; " + scope, failure);
  }

  {
    std::string failure;
    for (const CutSet& cs : catalog.cut_sets) {
      // G[S ∪ C] against the join G[S] ∨ C, both on the labelled vertex set S ∪ C.
      int bad = 0;
      for (const VertexSet& comp : cs.components) {
        VertexSet vs = cs.vertices;
        vs.insert(vs.end(), comp.begin(), comp.end());
        std::sort(vs.begin(), vs.end());
        std::vector<Edge> actual;
        for (auto [u, v] : induced_subgraph(h, vs).edges()) actual.emplace_back(vs[u], vs[v]);
        std::vector<Edge> joined;
        for (std::size_t i = 0; i < vs.size(); ++i) {
          for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const bool in_s_i = std::binary_search(cs.vertices.begin(), cs.vertices.end(), vs[i]);
            const bool in_s_j = std::binary_search(cs.vertices.begin(), cs.vertices.end(), vs[j]);
            if (in_s_i != in_s_j || h.adjacent(vs[i], vs[j])) joined.emplace_back(vs[i], vs[j]);
          }
        }
        if (actual != joined) ++bad;
      }
      if (bad > 2) {
        failure = "S=" + set_text(h, cs.vertices) + " non-join components=" + std::to_string(bad);
        break;
      }
    }
    out.expect("join_condition", failure.empty(), "at most two lobes are not joins; " + scope, failure);
  }
  return out.take();
}

TheoremReport check_interval_theorems(const Graph& h, const IntervalTheoremOptions& options) {
  require_connected(h);
  ReportBuilder out(h);
  const int n = h.order();
  const bool interval = is_interval(h);
  const int span = n >= 2 ? strong_span(h) : 0;
  const std::string span_text = "span=" + std::to_string(span);

  if (interval && n >= 2) {
    out.expect("interval_span", span == 1, "interval graph; " + span_text, span_text);
  } else {
    out.add("interval_span", CheckStatus::not_applicable, interval ? "single vertex" : "not interval");
  }

  if (is_tree(h) && n >= 2) {
    const bool claw_free = !find_induced_subdivided_claw(h).has_value();
    std::string detail = span_text + " interval=" + (interval ? "yes" : "no") +
                         " S13-free=" + (claw_free ? "yes" : "no");
    out.expect("tree_characterization", (span == 1) == interval && interval == claw_free, detail,
               detail);
  } else {
    out.add("tree_characterization", CheckStatus::not_applicable, "not a non-trivial tree");
  }

  const std::vector<Graph> attachments =
      options.attachments.empty() ? default_attachments() : options.attachments;

  auto augmentation_check = [&](const std::string& name, const std::vector<VertexSet>& sets,
                                const std::string& what) {
    std::string failure;
    for (const VertexSet& k : sets) {
      for (const Graph& extra : attachments) {
        const int s = strong_span(augment(h, k, extra));
        if (s != 1) {
          failure = "K=" + set_text(h, k) + " H=" + to_graph6(extra) + " span=" + std::to_string(s);
          break;
        }
      }
      if (!failure.empty()) break;
    }
    out.expect(name, failure.empty(),
               std::to_string(sets.size()) + " " + what + " x " + std::to_string(attachments.size()) +
                   " attachments",
               failure);
  };

  if (!interval) {
    out.add("end_clique_augmentation", CheckStatus::not_applicable, "not interval");
    out.add("cut_set_augmentation", CheckStatus::not_applicable, "not interval");
    return out.take();
  }

  if (n > options.representation_cap) {
    out.add("end_clique_augmentation", CheckStatus::not_applicable,
            "order above representation cap " + std::to_string(options.representation_cap));
  } else {
    augmentation_check("end_clique_augmentation", end_cliques(h, options.representation_cap),
                       "end-cliques");
  }

  std::vector<VertexSet> clique_cuts;
  for (const CutSet& cs : minimal_cut_sets(h, options.cut_set_cap).cut_sets) {
    if (cs.clique) clique_cuts.push_back(cs.vertices);
  }
  if (clique_cuts.empty()) {
    out.add("cut_set_augmentation", CheckStatus::not_applicable, "no minimal cut set within cap");
  } else {
    augmentation_check("cut_set_augmentation", clique_cuts, "minimal cut sets");
  }
  return out.take();
}

std::vector<TheoremReport> check_all(const Graph& h, const IntervalTheoremOptions& options) {
  return {check_span_inequalities(h), check_span1_structure(h, options.cut_set_cap),
          check_interval_theorems(h, options)};
}

}  // namespace spanlab
