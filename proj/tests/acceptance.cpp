// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when all pass).

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "catalog.hpp"
#include "spanlab/generators.hpp"
#include "spanlab/graph_io.hpp"
#include "spanlab/span.hpp"
#include "spanlab/structure.hpp"
#include "spanlab/verification.hpp"
#include "spanlab/walks.hpp"

using namespace spanlab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < limit_seconds;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s criterion %d: %s; %s; %.3fs (limit %.0fs)%s\n", pass ? "PASS" : "FAIL", id, title,
              o.detail.c_str(), secs, limit_seconds, in_time ? "" : " TIME EXCEEDED");
  std::fflush(stdout);
}

std::vector<Graph> fuzzed_graphs() {
  // 500 connected graphs, n in 2..8, edge probability cycling through three densities.
  const double densities[] = {0.15, 0.3, 0.5};
  std::vector<Graph> out;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int n = 2 + static_cast<int>(seed % 7);
    out.push_back(random_connected_graph(n, densities[seed % 3], 1000 + seed));
  }
  return out;
}

std::string first_violation(const TheoremReport& r) {
  for (const auto& c : r.checks) {
    if (c.status == CheckStatus::violated) return c.name + " " + c.witness;
  }
  return {};
}

}  // namespace

int main() {
  criterion(1, "figure 1 strong spans", 1, [] {
    const Graph g = fixture("figure1");
    const int v = vertex_span(g, Rule::traditional).value;
    const int e = edge_span(g, Rule::traditional).value;
    return Outcome{v == 2 && e == 1, "vertex=" + std::to_string(v) + " edge=" + std::to_string(e) +
                                         " expected 2 and 1"};
  });

  criterion(2, "figure 3 walks and strong vertex span", 1, [] {
    const Graph g = fixture("figure3");
    const std::vector<std::string> a{"1", "2", "8", "4", "7", "3", "6", "5", "6", "6", "6", "5", "8"};
    const std::vector<std::string> b{"5", "6", "6", "6", "5", "8", "2", "1", "2", "8", "4", "7", "3"};
    const WalkValidation w = validate_walk_pair(walk_pair_from_labels(g, a, b, Rule::traditional), g, 2);
    const int span = vertex_span(g, Rule::traditional).value;
    const bool ok = w.valid() && w.safety == 2 && span == 2;
    std::ostringstream d;
    d << "legal=" << w.legal() << " surjective=" << (w.alice_surjective && w.bob_surjective)
      << " safety=" << w.safety << " span=" << span << " expected safety 2, span 2";
    return Outcome{ok, d.str()};
  });

  criterion(3, "figure 2 span 1 and not chordal", 1, [] {
    const Graph g = fixture("figure2");
    const int span = vertex_span(g, Rule::traditional).value;
    const bool chordal = is_chordal(g).chordal;
    return Outcome{span == 1 && !chordal,
                   "span=" + std::to_string(span) + " chordal=" + (chordal ? "yes" : "no")};
  });

  criterion(4, "oracle equivalence on every connected graph with n <= 6", 300, [] {
    int graphs = 0, mismatches = 0;
    std::string first;
    for (int n = 1; n <= 6; ++n) {
      for (const Graph& g : testing::connected_graphs(n)) {
        ++graphs;
        for (Rule r : kAllRules) {
          for (SpanKind k : kAllKinds) {
            const int solver = compute_span(g, r, k).value;
            const int oracle = brute_force_span(g, r, k);
            if (solver != oracle) {
              if (!mismatches) {
                first = " first=" + to_graph6(g) + " " + std::string(to_string(r)) + "/" +
                        std::string(to_string(k));
              }
              ++mismatches;
            }
          }
        }
      }
    }
    return Outcome{graphs == 143 && mismatches == 0, std::to_string(graphs) + " graphs x 6 variants, " +
                                                          std::to_string(mismatches) + " mismatches" + first};
  });

  criterion(5, "span inequality fuzz, 500 graphs n <= 8", 600, [] {
    int violations = 0;
    std::string first;
    for (const Graph& g : fuzzed_graphs()) {
      const TheoremReport r = check_span_inequalities(g);
      if (r.has_violation()) {
        if (!violations) first = " first=" + first_violation(r);
        ++violations;
      }
    }
    return Outcome{violations == 0, "500 graphs, " + std::to_string(violations) + " violations" + first};
  });

  criterion(6, "interval graphs have span 1; tree characterisation n <= 9", 300, [] {
    int not_one = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const int n = 2 + static_cast<int>(seed % 9);
      if (vertex_span(random_interval_graph(n, seed), Rule::traditional).value != 1) ++not_one;
    }
    int trees = 0, tree_failures = 0;
    for (int n = 2; n <= 9; ++n) {
      for (const Graph& t : testing::trees(n)) {
        ++trees;
        const bool span_one = vertex_span(t, Rule::traditional).value == 1;
        const bool s13_free = !find_induced_subdivided_claw(t).has_value();
        if (span_one != s13_free) ++tree_failures;
      }
    }
    return Outcome{not_one == 0 && tree_failures == 0,
                   "200 interval graphs, " + std::to_string(not_one) + " with span != 1; " +
                       std::to_string(trees) + " trees, " + std::to_string(tree_failures) + " mismatches"};
  });

  criterion(7, "augmentation at end-cliques and minimal cut sets", 300, [] {
    std::mt19937_64 rng(77);
    auto attachment = [&](std::uint64_t seed) {
      const int h = 1 + static_cast<int>(uniform_below(rng, 4));
      return random_connected_graph(h, 0.5, seed);
    };
    int end_cases = 0, end_fail = 0, cut_cases = 0, cut_fail = 0;
    for (std::uint64_t seed = 0; end_cases < 50; ++seed) {
      const Graph g = random_interval_graph(2 + static_cast<int>(seed % 9), seed);
      const auto ends = end_cliques(g);
      const VertexSet& k = ends[uniform_below(rng, ends.size())];
      ++end_cases;
      if (vertex_span(augment(g, k, attachment(seed)), Rule::traditional).value != 1) ++end_fail;
    }
    for (std::uint64_t seed = 0; cut_cases < 50; ++seed) {
      const Graph g = random_interval_graph(3 + static_cast<int>(seed % 8), 5000 + seed);
      const auto catalog = minimal_cut_sets(g, g.order());
      if (catalog.cut_sets.empty()) continue;
      const CutSet& cs = catalog.cut_sets[uniform_below(rng, catalog.cut_sets.size())];
      if (!cs.clique) {
        ++cut_fail;  // interval graphs have clique minimal separators
        continue;
      }
      ++cut_cases;
      if (vertex_span(augment(g, cs.vertices, attachment(seed)), Rule::traditional).value != 1) ++cut_fail;
    }
    const int witness = vertex_span(fixture("figure3"), Rule::traditional).value;
    const bool ok = end_fail == 0 && cut_fail == 0 && witness == 2;
    return Outcome{ok, std::to_string(end_cases) + " end-clique cases (" + std::to_string(end_fail) +
                           " failures), " + std::to_string(cut_cases) + " cut-set cases (" +
                           std::to_string(cut_fail) + " failures), figure 3 span " + std::to_string(witness)};
  });

  criterion(8, "minimum steps against exhaustive enumeration n <= 5", 300, [] {
    int cases = 0, mismatches = 0;
    std::string first;
    for (int n = 1; n <= 5; ++n) {
      for (const Graph& g : testing::connected_graphs(n)) {
        for (Rule r : kAllRules) {
          ++cases;
          const MinStepsResult res = min_steps(g, r);
          const auto naive = brute_force_min_moves(g, r, res.span);
          const bool valid = validate_walk_pair(res.walks, g, res.span).valid();
          if (!valid || naive != res.moves) {
            if (!mismatches) first = " first=" + to_graph6(g) + "/" + std::string(to_string(r));
            ++mismatches;
          }
        }
      }
    }
    const int k2 = min_steps(complete_graph(2), Rule::traditional).moves;
    const int c4 = min_steps(cycle_graph(4), Rule::traditional).moves;
    return Outcome{mismatches == 0 && k2 == 1 && c4 == 3,
                   std::to_string(cases) + " graph/rule cases, " + std::to_string(mismatches) +
                       " mismatches; K2=" + std::to_string(k2) + " C4=" + std::to_string(c4) + first};
  });

  criterion(9, "span-1 structure lemmas on fuzzed graphs", 600, [] {
    int applicable = 0, violations = 0;
    std::string first;
    for (const Graph& g : fuzzed_graphs()) {
      const TheoremReport r = check_span1_structure(g, g.order());
      bool used = false;
      for (const auto& c : r.checks) used = used || (c.name == "cut_set_clique" && c.status != CheckStatus::not_applicable);
      applicable += used;
      if (r.has_violation()) {
        if (!violations) first = " first=" + first_violation(r);
        ++violations;
      }
    }
    return Outcome{violations == 0, std::to_string(applicable) + " of 500 graphs with span 1 and no universal vertex, " +
                                        std::to_string(violations) + " violations" + first};
  });

  return failures;
}
