#include <doctest.h>

#include "catalog.hpp"
#include "spanlab/errors.hpp"
#include "spanlab/generators.hpp"
#include "spanlab/span.hpp"

using namespace spanlab;

TEST_SUITE("span") {

TEST_CASE("figure 1: strong vertex span 2, strong edge span 1") {
  const Graph g = fixture("figure1");
  CHECK(vertex_span(g, Rule::traditional).value == 2);
  CHECK(edge_span(g, Rule::traditional).value == 1);
}

TEST_CASE("small named graphs") {
  const Graph k2 = complete_graph(2);
  CHECK(vertex_span(k2, Rule::traditional).value == 1);
  CHECK(vertex_span(k2, Rule::active).value == 1);  // swap places every step
  CHECK(vertex_span(k2, Rule::lazy).value == 0);    // the mover lands on the other player

  const Graph c4 = cycle_graph(4);
  CHECK(vertex_span(c4, Rule::traditional).value == 2);
  CHECK(edge_span(c4, Rule::traditional).value == 2);

  const Graph k1(1);
  for (Rule r : kAllRules) {
    for (SpanKind k : kAllKinds) CHECK(compute_span(k1, r, k).value == 0);
  }
}

TEST_CASE("invalid inputs") {
  std::vector<Edge> e{{0, 1}};
  CHECK_THROWS_AS(vertex_span(Graph(3, e), Rule::traditional), GraphError);
  CHECK_THROWS_AS(vertex_span(Graph(), Rule::traditional), GraphError);
}

TEST_CASE("span_report matches the individual searches") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      const SpanReport report = span_report(g);
      for (Rule r : kAllRules) {
        for (SpanKind k : kAllKinds) CHECK(report.value(r, k) == compute_span(g, r, k).value);
      }
    }
  }
}

TEST_CASE("certificates re-check and witness the value") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      for (Rule r : kAllRules) {
        for (SpanKind k : kAllKinds) {
          const SpanResult res = compute_span(g, r, k);
          CHECK(res.certificate.threshold == res.value);
          CHECK(certificate_holds(g, r, k, res.certificate));
          const auto p = safety_subgraph(build_product(g, r), res.value);
          CHECK(projects_onto_base(p, res.certificate.component));
          if (k == SpanKind::edge) CHECK(covers_base_edges(p, res.certificate.component));
          // Nothing good one level up.
          const auto up = safety_subgraph(build_product(g, r), res.value + 1);
          if (res.value + 1 <= metrics(g).radius) {
            CHECK((k == SpanKind::vertex ? good_components(up) : edge_good_components(up)).empty());
          }
        }
      }
    }
  }
}

TEST_CASE("tampered certificates are rejected") {
  const Graph g = fixture("figure1");
  SpanResult res = vertex_span(g, Rule::traditional);
  SpanCertificate forged = res.certificate;
  forged.threshold = 3;
  CHECK_FALSE(certificate_holds(g, Rule::traditional, SpanKind::vertex, forged));
  forged = res.certificate;
  forged.component.pop_back();
  CHECK_FALSE(certificate_holds(g, Rule::traditional, SpanKind::vertex, forged));
  // The vertex-good component at 2 does not traverse p1-p2 in both coordinates.
  CHECK_FALSE(certificate_holds(g, Rule::traditional, SpanKind::edge, res.certificate));
}

TEST_CASE("products components are ordered and partition the pairs") {
  const auto p = safety_subgraph(build_product(cycle_graph(5), Rule::active), 1);
  const auto comps = product_components(p);
  std::size_t total = 0;
  int last_min = -1;
  for (const auto& c : comps) {
    CHECK(std::is_sorted(c.begin(), c.end()));
    CHECK(c.front() > last_min);
    last_min = c.front();
    total += c.size();
  }
  CHECK(total == p.vertices().size());
  CHECK(to_string(SpanKind::edge) == "edge");
  CHECK(parse_kind("vertex") == SpanKind::vertex);
}

}  // TEST_SUITE
