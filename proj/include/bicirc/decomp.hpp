#pragma once

#include <string>
#include <vector>

#include "bicirc/multigraph.hpp"

namespace bicirc {

enum class TermKind { ThreeConnectedSimple, Cycle, Multilink };

/// Term graphs carry real labels (>= 0) and virtual-edge labels (< 0); each
/// virtual label appears in exactly two terms, which are joined by the tree
/// edge carrying that label.
struct TermNode {
  Multigraph term;
  TermKind kind;
};

struct TreeEdge {
  int a = -1;
  int b = -1;
  int virt = 0;  // shared virtual label, always negative
};

struct DecompositionTree {
  std::vector<TermNode> nodes;
  std::vector<TreeEdge> edges;
};

/// Glue g1 and g2 along the designated links: the endpoints of label1 and
/// label2 are identified pairwise (e1.u with e2.u unless flip), then both
/// designated edges are deleted.  Both labels must name links.
Multigraph two_sum(const Multigraph& g1, int label1, const Multigraph& g2,
                   int label2, bool flip = false);

/// The unique tree of 3-connected simple, cycle (length >= 3) and multilink
/// (mK2, m >= 3) terms whose iterated 2-sums rebuild g, with no two cycle
/// terms and no two multilink terms adjacent.  g must be loopless and
/// non-separable (2-connected on >= 3 vertices, or mK2 with m >= 3), with
/// <= 12 edges.
DecompositionTree canonical_tree_decomposition(const Multigraph& g);

/// Executes every 2-sum of the tree; the result is the decomposed graph
/// (exactly, labels included, for trees produced by
/// canonical_tree_decomposition).
Multigraph recompose(const DecompositionTree& t);

/// Recomposition of the subtree induced by the given node indices (must be
/// connected in the tree); dangling virtual edges become fresh real edges.
/// The result is always an ordinary graph minor of recompose(t).
Multigraph subtree_minor(const DecompositionTree& t,
                         const std::vector<int>& node_indices);

std::string to_dot(const DecompositionTree& t);

}  // namespace bicirc
