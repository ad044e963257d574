// Acceptance gate: one line per criterion, PASS or FAIL, then a summary.
// Every criterion carries a wall-clock budget; blowing the budget fails it.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "bicirc/bicircular.hpp"
#include "bicirc/corpus.hpp"
#include "bicirc/decomp.hpp"
#include "bicirc/named_graphs.hpp"
#include "bicirc/verify.hpp"

using namespace bicirc;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, long long budget_ms,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  if (ok && ms > budget_ms) {
    ok = false;
    detail = "over budget: " + std::to_string(ms) + "ms > " +
             std::to_string(budget_ms) + "ms";
  }
  if (!ok) ++failures;
  std::printf("criterion %2d %s: %s (%lldms)%s%s\n", number,
              title.c_str(), ok ? "PASS" : "FAIL", ms,
              detail.empty() ? "" : " ", detail.c_str());
  std::fflush(stdout);
}

bool passes(const VerificationReport& rep, std::string& detail) {
  if (rep.status == "pass") return true;
  detail = rep.status;
  if (rep.counterexample) detail += " " + *rep.counterexample;
  return false;
}

}  // namespace

int main() {
  criterion(1, "self-dual pairs among the named graphs", 5000,
            [](std::string& d) { return passes(check_self_dualities(), d); });

  criterion(2, "doubled cycles identically self-dual and 3-connected", 10000,
            [](std::string& d) { return passes(check_free_swirls(7), d); });

  criterion(3, "representation catalogs match the frozen lists", 60000,
            [](std::string& d) { return passes(check_representation_catalogs(), d); });

  criterion(4, "nine minimal non-cobicircular matroids with witnesses", 300000,
            [](std::string& d) { return passes(check_excluded_minors(), d); });

  criterion(5, "cobicircularity equivalence on 3-connected graphs", 120000,
            [](std::string& d) { return passes(check_cobicircular_equivalence(), d); });

  criterion(6, "single-edge extensions of the sporadic graphs", 120000,
            [](std::string& d) { return passes(check_extension_minors(), d); });

  criterion(7, "full characterization scan, 4 shards", 600000,
            [](std::string& d) { return passes(check_main_characterization(9, 4), d); });

  criterion(8, "combinatorial and matrix constructions agree", 300000,
            [](std::string& d) {
              CorpusParams p;
              p.max_vertices = 6;
              p.max_edges = 8;
              p.with_free_variant = true;
              int n = 0;
              for (const Multigraph& g : generate_corpus(p)) {
                Matroid a = bicircular_matroid(g);
                Matroid b = matrix_matroid_of(g);
                if (a.bases != b.bases || a.labels != b.labels) {
                  d = "disagreement on " + to_bgr(g);
                  return false;
                }
                ++n;
              }
              d = std::to_string(n) + " graphs";
              return n > 1000;
            });

  criterion(9, "structural property suites", 300000,
            [](std::string& d) {
              // deletion and contraction commute with the matroid
              CorpusParams small;
              small.max_vertices = 4;
              small.max_edges = 6;
              small.max_loops_per_vertex = 2;
              small.with_free_variant = true;
              for (const Multigraph& g : generate_corpus(small)) {
                Matroid b = bicircular_matroid(g);
                for (int i = 0; i < g.edge_count(); ++i) {
                  int lbl = g.labels[i];
                  Matroid dl = delete_elements(b, EdgeSet{1} << i);
                  if (dl.bases != bicircular_matroid(delete_edge(g, lbl)).bases) {
                    d = "deletion mismatch on " + to_bgr(g);
                    return false;
                  }
                  Matroid cl = contract_elements(b, EdgeSet{1} << i);
                  if (cl.bases != bicircular_matroid(bicircular_contract(g, lbl)).bases) {
                    d = "contraction mismatch on " + to_bgr(g);
                    return false;
                  }
                }
              }
              // degree criterion against the direct connectivity test
              CorpusParams wag;
              wag.min_vertices = 3;
              wag.max_vertices = 5;
              wag.max_edges = 7;
              wag.max_loops_per_vertex = 2;
              for (const Multigraph& g : generate_corpus(wag)) {
                if (!is_connected(g)) continue;
                if (wagner_3connected(g) != is_3connected(bicircular_matroid(g))) {
                  d = "criterion mismatch on " + to_bgr(g);
                  return false;
                }
              }
              // decomposition round trip and subtree-minor law
              CorpusParams dec;
              dec.max_vertices = 6;
              dec.max_edges = 8;
              dec.min_degree = 2;
              dec.max_loops_per_vertex = 0;
              dec.require_2connected = true;
              for (const Multigraph& g : generate_corpus(dec)) {
                if (g.vertex_count == 2 && g.edge_count() < 3) continue;
                DecompositionTree t = canonical_tree_decomposition(g);
                if (!is_isomorphic(recompose(t), g)) {
                  d = "round trip failed on " + to_bgr(g);
                  return false;
                }
                for (const TreeEdge& e : t.edges) {
                  if (t.nodes[e.a].kind == t.nodes[e.b].kind &&
                      t.nodes[e.a].kind != TermKind::ThreeConnectedSimple) {
                    d = "same-kind adjacency in " + to_bgr(g);
                    return false;
                  }
                  Multigraph sub = subtree_minor(t, {e.a, e.b});
                  if (!graph_minor_contains(g, sub)) {
                    d = "subtree minor not a minor of " + to_bgr(g);
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(10, "negative controls all fail", 600000,
            [](std::string& d) {
              struct Probe {
                const char* name;
                std::function<VerificationReport()> run;
              };
              const Probe probes[] = {
                  {"check_self_dualities", [] { return check_self_dualities(true); }},
                  {"check_free_swirls", [] { return check_free_swirls(7, true); }},
                  {"check_representation_catalogs",
                   [] { return check_representation_catalogs(true); }},
                  {"check_excluded_minors", [] { return check_excluded_minors(true); }},
                  {"check_cobicircular_equivalence",
                   [] { return check_cobicircular_equivalence(true); }},
                  {"check_extension_minors", [] { return check_extension_minors(true); }},
                  {"check_main_characterization",
                   [] { return check_main_characterization(8, 4, true); }},
              };
              for (const Probe& probe : probes) {
                VerificationReport rep = probe.run();
                if (rep.status != "fail") {
                  d = std::string(probe.name) + " did not fail when corrupted";
                  return false;
                }
              }
              return true;
            });

  std::printf("%s: %d of 10 criteria passed\n",
              failures == 0 ? "ACCEPTED" : "REJECTED", 10 - failures);
  return failures == 0 ? 0 : 1;
}
