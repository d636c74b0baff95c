#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spanlab/graph.hpp"
#include "spanlab/product.hpp"
#include "spanlab/span.hpp"
#include "spanlab/structure.hpp"

namespace spanlab {

// ---------------------------------------------------------------------------
// Independent oracles. These work from the walk definitions directly: moves
// are read off closed neighbourhoods and filtered by the weak-homomorphism
// condition of each rule, and distances come from Floyd-Warshall. Nothing is
// shared with the product-graph solver beyond Graph.

inline constexpr int kDefaultOracleCap = 6;

/// Largest k for which two walks keeping distance >= k can visit every
/// vertex (vertex kind) or traverse every edge (edge kind). Throws
/// CapacityError above `cap` vertices and GraphError for disconnected input.
int brute_force_span(const Graph& h, Rule rule, SpanKind kind, int cap = kDefaultOracleCap);

/// Fewest moves for a pair of vertex-covering walks keeping distance >= k,
/// by enumerating every walk of length 0, 1, 2, ... (iterative deepening).
/// A time step where neither player moves is not a move. nullopt when no
/// covering pair exists at distance k.
std::optional<int> brute_force_min_moves(const Graph& h, Rule rule, int k,
                                         int cap = kDefaultOracleCap);

// ---------------------------------------------------------------------------
// Theorem checks

enum class CheckStatus { holds, violated, not_applicable };

std::string_view to_string(CheckStatus status) noexcept;

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::not_applicable;
  std::string detail;
  std::string witness;  // replayable: graph6 plus the offending values
};

struct TheoremReport {
  std::string graph_id;  // graph6
  std::vector<CheckResult> checks;

  bool has_violation() const noexcept;
};

/// Per rule: 0 <= edge span <= vertex span <= radius, vertex - edge <= 1,
/// the girth lower bounds, and strong vertex span >= 1 for non-trivial h.
TheoremReport check_span_inequalities(const Graph& h);

/// For strong vertex span 1 and no universal vertex: every minimal cut set
/// (up to `cut_set_cap` vertices) is a clique, every union of its lobes has
/// strong vertex span 1, and at most two components of G - S fail to be
/// fully joined to S.
TheoremReport check_span1_structure(const Graph& h, int cut_set_cap = kDefaultCutSetCap);

struct IntervalTheoremOptions {
  int representation_cap = kDefaultRepresentationCap;
  int cut_set_cap = kDefaultCutSetCap;
  std::vector<Graph> attachments;  // empty: K1, K2, P3
};

/// Interval graphs have strong vertex span 1; trees have span 1 exactly when
/// interval (equivalently, S_{1,3}-free); augmenting an interval graph at an
/// end-clique or at a minimal cut set keeps span 1.
TheoremReport check_interval_theorems(const Graph& h, const IntervalTheoremOptions& options = {});

/// All three reports.
std::vector<TheoremReport> check_all(const Graph& h, const IntervalTheoremOptions& options = {});

}  // namespace spanlab
