#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bicirc/multigraph.hpp"
#include "bicirc/named_graphs.hpp"

using namespace bicirc;

TEST_CASE("named graph registry families") {
  CHECK(build_named("C3").edge_count() == 3);
  CHECK(build_named("C1").edges[0].kind == EdgeKind::Loop);
  CHECK(build_named("2C5").edge_count() == 10);
  CHECK(build_named("7K2").vertex_count == 2);
  CHECK(build_named("W4").vertex_count == 5);
  CHECK(build_named("W4").edge_count() == 8);
  CHECK(build_named("K23").edge_count() == 6);
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int c = 1; c <= 4; ++c) {
        Multigraph t = build_named("T_" + std::to_string(a) + "_" +
                                   std::to_string(b) + "_" + std::to_string(c));
        CHECK(t.vertex_count == 3);
        CHECK(t.edge_count() == a + b + c);
      }
  CHECK_THROWS(build_named("Q9"));
}

TEST_CASE("loop suffixes, with and without caret") {
  CHECK(build_named("C3o").edge_count() == 6);
  CHECK(build_named("C3^o").edge_count() == 6);
  CHECK(is_isomorphic(build_named("C3o"), build_named("C3^o")));
  CHECK(build_named("K4l").edge_count() == 7);
  CHECK(is_isomorphic(build_named("K4l"), build_named("K4^l")));
  CHECK(build_named("6K2l").edge_count() == 7);
  CHECK(build_named("5K2o").edge_count() == 7);
  // exact names win over suffix stripping
  CHECK(build_named("D4ll").edge_count() == 7);
}

TEST_CASE("doubled triangle equals the triangle with all multiplicities 2") {
  CHECK(canonical_form(build_named("2C3")) == canonical_form(build_named("T_2_2_2")));
  CHECK(is_isomorphic(build_named("2C3"), build_named("T_2_2_2")));
}

TEST_CASE("deletion and contraction examples") {
  Multigraph g = delete_edge(build_named("2C3"), 0);
  CHECK(is_isomorphic(g, build_named("T_2_2_1")));
  // contracting the single edge of T_3_3_1 merges the tripled classes
  Multigraph t331 = build_named("T_3_3_1");
  int single = -1;
  for (int i = 0; i < t331.edge_count(); ++i) {
    const Edge& e = t331.edges[i];
    int par = 0;
    for (const Edge& f : t331.edges)
      par += (f.u == e.u && f.v == e.v) || (f.u == e.v && f.v == e.u);
    if (par == 1) single = t331.labels[i];
  }
  REQUIRE(single >= 0);
  CHECK(is_isomorphic(contract_link(t331, single), build_named("6K2")));
  // contracting a doubled edge of 2C3 makes its partner a loop
  Multigraph c = contract_link(build_named("2C3"), 0);
  int loops = 0;
  for (const Edge& e : c.edges) loops += e.kind == EdgeKind::Loop;
  CHECK(c.vertex_count == 2);
  CHECK(loops == 1);
  CHECK_THROWS(contract_link(build_named("C3o"), 3));  // label 3 is a loop
}

TEST_CASE("graph properties") {
  GraphProperties p = graph_properties(build_named("C3o"));
  CHECK(p.is_2connected);
  CHECK(p.min_degree == 4);
  CHECK(p.max_loops_per_vertex == 1);
  CHECK_FALSE(p.has_free_edge);
  CHECK_FALSE(graph_properties(build_named("T_2_1_0")).is_2connected);
  CHECK(graph_properties(build_named("5K2")).min_degree == 5);
}

TEST_CASE("canonical form is a relabeling invariant") {
  std::mt19937 rng(7);
  for (const char* name : {"K4", "K4++", "C4++", "2C4", "C3o", "W4", "T_3_2_1",
                           "N8", "O8", "Z8", "Z8d", "F10", "D4ll"}) {
    Multigraph g = build_named(name);
    std::string form = canonical_form(g);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<int> perm(g.vertex_count);
      for (int i = 0; i < g.vertex_count; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(relabel_vertices(g, perm)) == form);
    }
  }
}

TEST_CASE("isomorphism distinguishes the uniform-matroid representation pair") {
  CHECK_FALSE(is_isomorphic(build_named("K4"), build_named("C4++")));
  CHECK_FALSE(is_isomorphic(build_named("Z8"), build_named("Z8d")));
  CHECK_FALSE(is_isomorphic(build_named("N8"), build_named("O8")));
}

TEST_CASE("graph minor containment") {
  Multigraph k4pp = build_named("K4++");
  CHECK(graph_minor_contains(k4pp, build_named("K4")));
  CHECK_FALSE(graph_minor_contains(k4pp, build_named("W4")));
  CHECK_FALSE(graph_minor_contains(k4pp, build_named("T_2_2_3")));
  CHECK(graph_minor_contains(build_named("2C3"), build_named("T_2_2_2")));
  CHECK_FALSE(graph_minor_contains(build_named("K4"), build_named("C4++")));

  std::vector<MinorOp> ops;
  REQUIRE(graph_minor_contains(build_named("2C4"), build_named("C4"), &ops));
  Multigraph replay = apply_minor_ops(build_named("2C4"), ops);
  CHECK(is_isomorphic(drop_isolated_vertices(replay), build_named("C4")));
}

TEST_CASE("bgr round trip and parse errors") {
  for (const char* name : {"K4++", "F10", "C3o"}) {
    Multigraph g = build_named(name);
    CHECK(parse_bgr(to_bgr(g)).edges == g.edges);
  }
  CHECK_THROWS(parse_bgr("link 0 1\n"));         // edge before vertices
  CHECK_THROWS(parse_bgr("vertices 2\nlink 0\n"));
  CHECK_THROWS(parse_bgr("vertices 2\nwidget\n"));
  Multigraph f(1, {Edge::loop(0), Edge::free_edge()});
  CHECK(parse_bgr(to_bgr(f)).edges == f.edges);
}

TEST_CASE("figure graphs are present and well formed") {
  REQUIRE(figure_graphs_available());
  for (const char* name : {"N8", "O8", "Z8", "Z8d", "F10", "D4ll"}) {
    Multigraph g = build_named(name);
    CHECK_NOTHROW(g.validate());
    CHECK(is_connected(g));
  }
  CHECK(build_named("N8").edge_count() == 8);
  CHECK(build_named("F10").edge_count() == 10);
  CHECK(build_named("F10").vertex_count == 5);
  CHECK(build_named("D4ll").edge_count() == 7);
}
