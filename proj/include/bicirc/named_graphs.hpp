#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bicirc/multigraph.hpp"

namespace bicirc {

/// Named-graph registry.  Keys:
///   C<n>        cycle on n vertices (C1 is a single loop, C2 a doubled link)
///   2C<n>       cycle on n vertices with every edge doubled
///   <m>K2       m parallel links on two vertices
///   T_<a>_<b>_<c>  triangle with edge multiplicities a, b, c
///   W<n>        wheel: hub plus an n-cycle rim, n >= 3
///   K4  K4+  K4++   complete graph on 4 vertices, with one / two
///                   non-adjacent edges doubled
///   C4++        4-cycle with both edges of one opposite pair doubled
///   K23         complete bipartite graph on parts of sizes 2 and 3
///   N8 O8 Z8 Z8d F10 D4ll   sporadic graphs from data/figure_graphs.bgr
/// Optional suffix ^l (loop added at vertex 0) or ^o (loop added at every
/// vertex); the caret may be omitted, e.g. "C3o", "K4l", "6K2l".
Multigraph build_named(const std::string& key);

bool is_named_graph(const std::string& key);

/// All keys with a fixed expansion (registry families are unbounded and not
/// listed; sporadic keys appear only when the data file is found).
std::vector<std::string> named_graph_keys();

/// True when data/figure_graphs.bgr was located (see figure_data_path).
bool figure_graphs_available();

/// Resolution order: $BICIRC_DATA_DIR/figure_graphs.bgr, then
/// ./data/figure_graphs.bgr, then the build-time source data directory.
std::optional<std::string> figure_data_path();

/// Parses a file of `graph <name>` sections, each followed by ordinary
/// .bgr lines.
std::map<std::string, Multigraph> parse_bgr_collection(const std::string& text);

/// Doubled triangle with one edge subdivided: the graph whose bicircular
/// matroid is the series extension of B(T_{2,2,2}) at one element.
Multigraph t222_prime();

}  // namespace bicirc
