#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bicirc/corpus.hpp"
#include "bicirc/decomp.hpp"
#include "bicirc/named_graphs.hpp"

using namespace bicirc;

namespace {

std::vector<Multigraph> decomposable_corpus(int max_edges) {
  CorpusParams p;
  p.max_vertices = 6;
  p.max_edges = max_edges;
  p.min_degree = 2;
  p.max_loops_per_vertex = 0;
  p.require_2connected = true;
  std::vector<Multigraph> out;
  for (const Multigraph& g : generate_corpus(p)) {
    if (g.vertex_count == 2 && g.edge_count() < 3) continue;
    out.push_back(g);
  }
  return out;
}

// structural signature used for the uniqueness property: node terms up to
// isomorphism together with the tree's kind-adjacency multiset
std::string tree_signature(const DecompositionTree& t) {
  std::vector<std::string> nodes;
  for (const TermNode& n : t.nodes)
    nodes.push_back(std::to_string(static_cast<int>(n.kind)) + ":" +
                    canonical_form(n.term));
  std::sort(nodes.begin(), nodes.end());
  std::vector<std::string> edges;
  for (const TreeEdge& e : t.edges) {
    std::string a = std::to_string(static_cast<int>(t.nodes[e.a].kind));
    std::string b = std::to_string(static_cast<int>(t.nodes[e.b].kind));
    edges.push_back(a < b ? a + b : b + a);
  }
  std::sort(edges.begin(), edges.end());
  std::string sig;
  for (const std::string& s : nodes) sig += s + "|";
  sig += "/";
  for (const std::string& s : edges) sig += s + ",";
  return sig;
}

std::vector<std::vector<int>> connected_subtrees(const DecompositionTree& t) {
  int n = static_cast<int>(t.nodes.size());
  std::vector<std::vector<int>> result;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> sel;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) sel.push_back(i);
    // connectivity over tree edges inside the selection
    std::vector<int> comp(n, -1);
    comp[sel[0]] = 0;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const TreeEdge& e : t.edges) {
        if (!(mask >> e.a & 1) || !(mask >> e.b & 1)) continue;
        if (comp[e.a] == 0 && comp[e.b] != 0) { comp[e.b] = 0; grew = true; }
        if (comp[e.b] == 0 && comp[e.a] != 0) { comp[e.a] = 0; grew = true; }
      }
    }
    bool connected = true;
    for (int i : sel) connected &= comp[i] == 0;
    if (connected) result.push_back(sel);
  }
  return result;
}

}  // namespace

TEST_CASE("two sums") {
  Multigraph s = two_sum(build_named("C3"), 0, build_named("3K2"), 0);
  CHECK(is_isomorphic(s, build_named("T_2_1_1")));
  Multigraph c4 = two_sum(build_named("C4"), 0, build_named("4K2"), 0);
  CHECK(is_isomorphic(c4, build_named("T_3_1_1")) == false);
  CHECK(c4.vertex_count == 4);
  CHECK(c4.edge_count() == 6);  // C4 with one edge replaced by 3 parallels
  CHECK(is_isomorphic(two_sum(build_named("K4"), 0, build_named("2K2"), 0),
                      build_named("K4")));
  CHECK_THROWS(two_sum(build_named("C3o"), 3, build_named("3K2"), 0));
}

TEST_CASE("leaf decompositions") {
  auto k4 = canonical_tree_decomposition(build_named("K4"));
  REQUIRE(k4.nodes.size() == 1);
  CHECK(k4.nodes[0].kind == TermKind::ThreeConnectedSimple);
  auto c5 = canonical_tree_decomposition(build_named("C5"));
  REQUIRE(c5.nodes.size() == 1);
  CHECK(c5.nodes[0].kind == TermKind::Cycle);
  auto m = canonical_tree_decomposition(build_named("5K2"));
  REQUIRE(m.nodes.size() == 1);
  CHECK(m.nodes[0].kind == TermKind::Multilink);
}

TEST_CASE("doubled square decomposition") {
  auto t = canonical_tree_decomposition(build_named("2C4"));
  REQUIRE(t.nodes.size() == 5);
  int cyc = 0, ml = 0;
  for (const TermNode& n : t.nodes) {
    cyc += n.kind == TermKind::Cycle;
    ml += n.kind == TermKind::Multilink;
    if (n.kind == TermKind::Multilink) CHECK(n.term.edge_count() == 3);
  }
  CHECK(cyc == 1);
  CHECK(ml == 4);
  CHECK(is_isomorphic(recompose(t), build_named("2C4")));
  for (int i = 0; i < 5; ++i)
    if (t.nodes[i].kind == TermKind::Cycle)
      CHECK(is_isomorphic(subtree_minor(t, {i}), build_named("C4")));
}

TEST_CASE("recomposition of a known tree") {
  auto t = canonical_tree_decomposition(build_named("T_3_3_1"));
  REQUIRE(t.nodes.size() == 3);
  int cyc = 0, ml = 0;
  for (const TermNode& n : t.nodes) {
    cyc += n.kind == TermKind::Cycle;
    ml += n.kind == TermKind::Multilink;
  }
  CHECK(cyc == 1);
  CHECK(ml == 2);
  CHECK(is_isomorphic(recompose(t), build_named("T_3_3_1")));
  // one cycle node plus one multilink node recompose to T_3_1_1
  std::vector<int> pair_sel;
  for (int i = 0; i < 3 && pair_sel.empty(); ++i)
    for (const TreeEdge& e : t.edges)
      if ((e.a == i || e.b == i) && t.nodes[i].kind == TermKind::Cycle) {
        pair_sel = {i, e.a == i ? e.b : e.a};
        break;
      }
  REQUIRE(pair_sel.size() == 2);
  CHECK(is_isomorphic(subtree_minor(t, pair_sel), build_named("T_3_1_1")));
}

TEST_CASE("rejected inputs") {
  CHECK_THROWS(canonical_tree_decomposition(build_named("C3o")));  // loops
  CHECK_THROWS(canonical_tree_decomposition(build_named("T_2_1_0")));  // separable
  CHECK_THROWS(canonical_tree_decomposition(build_named("2K2")));
  Multigraph path(3, {Edge::link(0, 1), Edge::link(1, 2)});
  CHECK_THROWS(canonical_tree_decomposition(path));
}

TEST_CASE("round trip, validity, uniqueness, subtree-minor law over the corpus") {
  std::mt19937 rng(11);
  for (const Multigraph& g : decomposable_corpus(8)) {
    DecompositionTree t = canonical_tree_decomposition(g);
    // round trip
    REQUIRE(is_isomorphic(recompose(t), g));
    // term-kind constraints
    for (const TermNode& n : t.nodes) {
      if (n.kind == TermKind::Cycle) CHECK(n.term.vertex_count >= 3);
      if (n.kind == TermKind::Multilink) {
        CHECK(n.term.vertex_count == 2);
        CHECK(n.term.edge_count() >= 3);
      }
    }
    // adjacency prohibitions
    for (const TreeEdge& e : t.edges)
      CHECK((t.nodes[e.a].kind != t.nodes[e.b].kind ||
             t.nodes[e.a].kind == TermKind::ThreeConnectedSimple));
    // uniqueness under relabeling
    std::string sig = tree_signature(t);
    for (int trial = 0; trial < 2; ++trial) {
      std::vector<int> perm(g.vertex_count);
      for (int i = 0; i < g.vertex_count; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      REQUIRE(tree_signature(canonical_tree_decomposition(
                  relabel_vertices(g, perm))) == sig);
    }
    // subtree-minor law
    for (const std::vector<int>& sel : connected_subtrees(t)) {
      Multigraph sub = subtree_minor(t, sel);
      REQUIRE(graph_minor_contains(g, sub));
    }
  }
}

TEST_CASE("dot export mentions every node") {
  auto t = canonical_tree_decomposition(build_named("2C4"));
  std::string dot = to_dot(t);
  CHECK(dot.find("multilink") != std::string::npos);
  CHECK(dot.find("cycle") != std::string::npos);
  CHECK(dot.find("n4") != std::string::npos);
}
