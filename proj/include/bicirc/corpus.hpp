#pragma once

#include <vector>

#include "bicirc/multigraph.hpp"

namespace bicirc {

/// Deterministic stream of connected multigraphs without isolated vertices,
/// one representative per isomorphism class.
struct CorpusParams {
  int min_vertices = 1;
  int max_vertices = 6;
  int min_edges = 1;
  int max_edges = 8;
  int min_degree = 1;           // loops count 2
  int max_loops_per_vertex = 8;
  bool require_2connected = false;
  bool with_free_variant = false;  // additionally emit each graph plus one free edge
};

std::vector<Multigraph> generate_corpus(const CorpusParams& p);

/// All graphs with 3-connected bicircular matroid and at most max_edges
/// edges, up to isomorphism.  For graphs on >= 3 vertices the degree
/// criterion prunes the enumeration; tiny vertex counts are tested against
/// the matroid directly.
std::vector<Multigraph> three_connected_corpus(int max_edges);

}  // namespace bicirc
