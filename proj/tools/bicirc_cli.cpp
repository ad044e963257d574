#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bicirc/bicircular.hpp"
#include "bicirc/decomp.hpp"
#include "bicirc/matroid.hpp"
#include "bicirc/multigraph.hpp"
#include "bicirc/named_graphs.hpp"
#include "bicirc/verify.hpp"

namespace {

using namespace bicirc;

Multigraph resolve_graph(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return load_bgr(arg);
  if (!is_named_graph(arg)) throw std::runtime_error("unknown named graph '" + arg + "'");
  return build_named(arg);
}

Matroid resolve_matroid(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return load_mtd(arg);
  return builtin_matroid(arg);
}

std::string hex_form(const std::string& form) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : form) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

/// Both constructions of B(G) must agree before anything is printed.
Matroid checked_bicircular(const Multigraph& g) {
  Matroid b = bicircular_matroid(g);
  if (g.edge_count() <= 16) {
    Matroid a = matrix_matroid_of(g);
    if (a.bases != b.bases || a.labels != b.labels)
      throw std::runtime_error("oracle disagreement: combinatorial and matrix constructions differ");
  }
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bicircular matroid toolkit"};
  app.require_subcommand(1);

  // graph
  std::string graph_arg;
  bool opt_show = false, opt_canonical = false, opt_props = false;
  auto* cmd_graph = app.add_subcommand("graph", "build or inspect a multigraph");
  cmd_graph->add_option("input", graph_arg, "named graph or .bgr file")->required();
  cmd_graph->add_flag("--show", opt_show, "print the edge list");
  cmd_graph->add_flag("--canonical", opt_canonical, "print the canonical form (hex)");
  cmd_graph->add_flag("--props", opt_props, "print connectivity properties");

  // matroid
  std::string mat_source, mat_arg;
  bool opt_bases = false, opt_circuits = false, opt_dual = false, opt_rank = false;
  auto* cmd_matroid = app.add_subcommand("matroid", "derive and inspect a matroid");
  cmd_matroid->add_option("source", mat_source, "from-graph | from-file")
      ->required()
      ->check(CLI::IsMember({"from-graph", "from-file"}));
  cmd_matroid->add_option("input", mat_arg, "graph key, .bgr file, or .mtd file")->required();
  cmd_matroid->add_flag("--bases", opt_bases, "print the basis list (.mtd)");
  cmd_matroid->add_flag("--circuits", opt_circuits, "print all circuits");
  cmd_matroid->add_flag("--dual", opt_dual, "dualize first");
  cmd_matroid->add_flag("--rank", opt_rank, "print the rank");

  // reps
  std::string reps_arg;
  auto* cmd_reps = app.add_subcommand("reps", "enumerate bicircular representations");
  cmd_reps->add_option("matroid", reps_arg, "builtin matroid name or .mtd file")->required();

  // decompose
  std::string dec_arg;
  bool opt_dot = false;
  auto* cmd_decompose = app.add_subcommand("decompose", "canonical tree decomposition");
  cmd_decompose->add_option("input", dec_arg, "named graph or .bgr file")->required();
  cmd_decompose->add_flag("--dot", opt_dot, "emit DOT");

  // verify
  std::string suite = "all", report_path;
  int max_edges = 9, jobs = 1;
  auto* cmd_verify = app.add_subcommand("verify", "run the verification suite");
  cmd_verify->add_option("--suite", suite, "all or a single check id");
  cmd_verify->add_option("--max-edges", max_edges, "edge bound for the exhaustive scan");
  cmd_verify->add_option("--report", report_path, "write the JSON report here");
  cmd_verify->add_option("--jobs", jobs, "shard the scan over this many threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_graph) {
      Multigraph g = resolve_graph(graph_arg);
      if (!opt_show && !opt_canonical && !opt_props) opt_show = true;
      if (opt_show) std::cout << to_bgr(g);
      if (opt_canonical) std::cout << hex_form(canonical_form(g)) << "\n";
      if (opt_props) {
        GraphProperties p = graph_properties(g);
        std::cout << "vertices " << g.vertex_count << "\nedges " << g.edge_count()
                  << "\n2-connected " << (p.is_2connected ? "true" : "false")
                  << "\nmin_degree " << p.min_degree << "\nmax_loops_per_vertex "
                  << p.max_loops_per_vertex << "\nfree_edges "
                  << (p.has_free_edge ? "true" : "false") << "\n";
      }
      return 0;
    }
    if (*cmd_matroid) {
      Matroid m = mat_source == "from-file" && std::filesystem::is_regular_file(mat_arg) &&
                          mat_arg.size() > 4 && mat_arg.substr(mat_arg.size() - 4) == ".mtd"
                      ? load_mtd(mat_arg)
                      : checked_bicircular(resolve_graph(mat_arg));
      if (mat_source == "from-file" && !std::filesystem::is_regular_file(mat_arg))
        throw std::runtime_error("no such file: " + mat_arg);
      if (opt_dual) m = dual(m);
      if (!opt_bases && !opt_circuits && !opt_rank) opt_bases = true;
      if (opt_rank) std::cout << m.rank << "\n";
      if (opt_bases) std::cout << to_mtd(m);
      if (opt_circuits) {
        for (EdgeSet c : circuits(m)) {
          std::cout << "circuit";
          for (int i = 0; i < m.n; ++i)
            if (c >> i & 1) std::cout << " " << m.labels[i];
          std::cout << "\n";
        }
      }
      return 0;
    }
    if (*cmd_reps) {
      Matroid m = resolve_matroid(reps_arg);
      std::vector<Multigraph> reps = enumerate_representations(m);
      for (size_t i = 0; i < reps.size(); ++i) {
        std::cout << "# representation " << i + 1 << "\n" << to_bgr(reps[i]);
        if (i + 1 < reps.size()) std::cout << "\n";
      }
      std::cout << reps.size() << " representation" << (reps.size() == 1 ? "" : "s")
                << "\n";
      return 0;
    }
    if (*cmd_decompose) {
      Multigraph g = resolve_graph(dec_arg);
      bool had_loops = false;
      for (const Edge& e : g.edges) had_loops |= e.kind != EdgeKind::Link;
      if (had_loops) {
        std::cerr << "warning: loops stripped before decomposition\n";
        g = strip_loops(g);
      }
      DecompositionTree t = canonical_tree_decomposition(g);
      if (opt_dot) {
        std::cout << to_dot(t);
      } else {
        for (size_t i = 0; i < t.nodes.size(); ++i) {
          const char* kind = t.nodes[i].kind == TermKind::Cycle ? "cycle"
                             : t.nodes[i].kind == TermKind::Multilink ? "multilink"
                                                                      : "3-connected";
          std::cout << "node " << i << " " << kind << "\n" << to_bgr(t.nodes[i].term);
        }
        for (const TreeEdge& e : t.edges)
          std::cout << "tree-edge " << e.a << " " << e.b << " via " << e.virt << "\n";
        std::cout << t.nodes.size() << " node" << (t.nodes.size() == 1 ? "" : "s") << "\n";
      }
      return 0;
    }
    if (*cmd_verify) {
      std::vector<std::string> ids =
          suite == "all" ? check_ids() : std::vector<std::string>{suite};
      std::vector<VerificationReport> reports;
      bool any_fail = false, any_skip = false;
      for (const std::string& id : ids) {
        reports.push_back(run_check(id, max_edges, jobs));
        any_fail |= reports.back().status == "fail";
        any_skip |= reports.back().status.rfind("skipped", 0) == 0;
      }
      std::string json = reports_to_json(reports);
      std::cout << json;
      if (!report_path.empty()) {
        std::ofstream f(report_path);
        if (!f) throw std::runtime_error("cannot write " + report_path);
        f << json;
      }
      if (any_skip) std::cerr << "warning: some checks were skipped\n";
      return any_fail ? 1 : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
