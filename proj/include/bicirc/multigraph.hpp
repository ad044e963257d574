#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bicirc {

enum class EdgeKind : uint8_t { Link, Loop, Free };

struct Edge {
  EdgeKind kind = EdgeKind::Free;
  int u = -1;  // first endpoint (Link) or the vertex (Loop)
  int v = -1;  // second endpoint (Link only)

  static Edge link(int u, int v) { return Edge{EdgeKind::Link, u, v}; }
  static Edge loop(int v) { return Edge{EdgeKind::Loop, v, -1}; }
  static Edge free_edge() { return Edge{EdgeKind::Free, -1, -1}; }

  bool touches(int w) const {
    return (kind == EdgeKind::Link && (u == w || v == w)) ||
           (kind == EdgeKind::Loop && u == w);
  }
  bool operator==(const Edge&) const = default;
};

/// Multigraph with links, loops and free edges.  Edge order is the
/// ground-set order of the derived bicircular matroid; labels default to
/// 0..m-1 and survive minor operations unchanged.
struct Multigraph {
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<int> labels;

  Multigraph() = default;
  Multigraph(int n, std::vector<Edge> es);
  Multigraph(int n, std::vector<Edge> es, std::vector<int> lbls);

  int edge_count() const { return static_cast<int>(edges.size()); }
  int find_label(int label) const;  // index of edge with given label, -1 if absent
  int degree(int v) const;          // loops count 2

  void validate() const;  // throws std::invalid_argument on bad structure
};

struct GraphProperties {
  bool is_2connected = false;
  int min_degree = 0;
  int max_loops_per_vertex = 0;
  bool has_free_edge = false;
};

// -- basic operations ------------------------------------------------------

Multigraph delete_edge(const Multigraph& g, int label);

/// Contracts a link: both endpoints map to the smaller index, indices are
/// compacted, parallel edges become loops.  Throws if the edge is not a link.
Multigraph contract_link(const Multigraph& g, int label);

GraphProperties graph_properties(const Multigraph& g);

bool is_connected(const Multigraph& g);          // free edges ignored, all vertices must be reachable
bool is_vertex_3connected(const Multigraph& g);  // >=4 vertices, no cutset of size <= 2

Multigraph relabel_vertices(const Multigraph& g, const std::vector<int>& perm);
Multigraph strip_loops(const Multigraph& g);
Multigraph drop_isolated_vertices(const Multigraph& g);

// -- isomorphism -----------------------------------------------------------

/// Canonical byte string, equal for two graphs iff they are isomorphic
/// (vertex bijection + kind-preserving edge bijection).  Branch-and-bound
/// over vertex orderings; vertex_count <= 10.
std::string canonical_form(const Multigraph& g);

bool is_isomorphic(const Multigraph& g, const Multigraph& h);

// -- graph-sense minors ----------------------------------------------------

struct MinorOp {
  enum Kind { DeleteEdge, ContractLink } kind;
  int label;
};

/// Ordinary graph-minor containment: deletions of edges and isolated
/// vertices, contractions of links; loop contraction coincides with loop
/// deletion.  Both graphs must have <= 12 edges.
bool graph_minor_contains(const Multigraph& g, const Multigraph& h,
                          std::vector<MinorOp>* witness = nullptr);

Multigraph apply_minor_ops(const Multigraph& g, const std::vector<MinorOp>& ops);

// -- text format (.bgr) ----------------------------------------------------

std::string to_bgr(const Multigraph& g);
Multigraph parse_bgr(const std::string& text);
Multigraph load_bgr(const std::string& path);

}  // namespace bicirc
