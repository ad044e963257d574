#include <iostream>

#include "CLI11.hpp"
#include "bicirc/corpus.hpp"
#include "bicirc/multigraph.hpp"

int main(int argc, char** argv) {
  CLI::App app{"deterministic multigraph corpus generator"};
  bicirc::CorpusParams p;
  bool three_connected = false;
  app.add_option("--min-vertices", p.min_vertices);
  app.add_option("--max-vertices", p.max_vertices);
  app.add_option("--min-edges", p.min_edges);
  app.add_option("--max-edges", p.max_edges);
  app.add_option("--min-degree", p.min_degree);
  app.add_option("--max-loops", p.max_loops_per_vertex);
  app.add_flag("--two-connected", p.require_2connected);
  app.add_flag("--free-variants", p.with_free_variant);
  app.add_flag("--three-connected", three_connected,
               "only graphs whose bicircular matroid is 3-connected");
  CLI11_PARSE(app, argc, argv);

  std::vector<bicirc::Multigraph> corpus =
      three_connected ? bicirc::three_connected_corpus(p.max_edges)
                      : bicirc::generate_corpus(p);
  for (size_t i = 0; i < corpus.size(); ++i)
    std::cout << "graph g" << i << "\n" << bicirc::to_bgr(corpus[i]) << "\n";
  std::cerr << corpus.size() << " graphs\n";
  return 0;
}
