#include "bicirc/decomp.hpp"
#include <set>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bicirc {

Multigraph two_sum(const Multigraph& g1, int label1, const Multigraph& g2,
                   int label2, bool flip) {
  int i1 = g1.find_label(label1), i2 = g2.find_label(label2);
  if (i1 < 0 || i2 < 0) throw std::invalid_argument("two_sum: unknown label");
  const Edge& e1 = g1.edges[i1];
  const Edge& e2 = g2.edges[i2];
  if (e1.kind != EdgeKind::Link || e2.kind != EdgeKind::Link)
    throw std::invalid_argument("two_sum: designated edge is not a link");
  int u2 = flip ? e2.v : e2.u;
  int v2 = flip ? e2.u : e2.v;
  // g2's vertices: u2 -> e1.u, v2 -> e1.v, the rest appended in index order
  std::vector<int> map2(g2.vertex_count, -1);
  map2[u2] = e1.u;
  map2[v2] = e1.v;
  int next = g1.vertex_count;
  for (int w = 0; w < g2.vertex_count; ++w)
    if (map2[w] < 0) map2[w] = next++;
  std::vector<Edge> es;
  std::vector<int> lbls;
  for (int i = 0; i < g1.edge_count(); ++i) {
    if (i == i1) continue;
    es.push_back(g1.edges[i]);
    lbls.push_back(g1.labels[i]);
  }
  // labels from g2 that collide with g1's move to fresh values
  std::set<int> used(lbls.begin(), lbls.end());
  int fresh = used.empty() ? 0 : *used.rbegin() + 1;
  for (int i = 0; i < g2.edge_count(); ++i) {
    if (i == i2) continue;
    const Edge& e = g2.edges[i];
    if (e.kind == EdgeKind::Link)
      es.push_back(Edge::link(map2[e.u], map2[e.v]));
    else if (e.kind == EdgeKind::Loop)
      es.push_back(Edge::loop(map2[e.u]));
    else
      es.push_back(e);
    int l = g2.labels[i];
    if (used.count(l)) l = fresh++;
    used.insert(l);
    lbls.push_back(l);
  }
  return Multigraph(next, std::move(es), std::move(lbls));
}

namespace {

bool is_simple(const Multigraph& g) {
  for (int i = 0; i < g.edge_count(); ++i) {
    if (g.edges[i].kind != EdgeKind::Link) return false;
    for (int j = i + 1; j < g.edge_count(); ++j) {
      const Edge &a = g.edges[i], &b = g.edges[j];
      if (b.kind == EdgeKind::Link &&
          ((a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u)))
        return false;
    }
  }
  return true;
}

bool is_cycle_graph(const Multigraph& g) {
  if (g.vertex_count < 3 || !is_simple(g) || !is_connected(g)) return false;
  for (int v = 0; v < g.vertex_count; ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

TermKind classify_leaf(const Multigraph& g) {
  if (g.vertex_count == 2) return TermKind::Multilink;
  if (is_cycle_graph(g)) return TermKind::Cycle;
  return TermKind::ThreeConnectedSimple;
}

bool is_leaf_term(const Multigraph& g) {
  if (g.vertex_count == 2) return true;
  if (is_cycle_graph(g)) return true;
  return is_simple(g) && is_vertex_3connected(g);
}

// Edge classes w.r.t. the pair {a,b}: two edges are equivalent when joined
// by a path avoiding a and b; each direct a-b edge is its own class.
std::vector<std::vector<int>> separation_classes(const Multigraph& g, int a, int b) {
  int m = g.edge_count();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int w = 0; w < g.vertex_count; ++w) {
    if (w == a || w == b) continue;
    int first = -1;
    for (int i = 0; i < m; ++i)
      if (g.edges[i].touches(w)) {
        if (first < 0) first = i;
        else parent[find(i)] = find(first);
      }
  }
  std::vector<std::vector<int>> classes;
  std::vector<int> where(m, -1);
  for (int i = 0; i < m; ++i) {
    int r = find(i);
    if (where[r] < 0) {
      where[r] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[where[r]].push_back(i);
  }
  return classes;
}

// Restrict g to the listed edge indices plus a virtual link between a and b,
// compacting vertex indices (order preserved; a comes before b already when
// a < b, which the caller guarantees).
Multigraph side_graph(const Multigraph& g, const std::vector<int>& idxs,
                      int a, int b, int virt_label) {
  std::vector<int> map(g.vertex_count, -1);
  std::vector<char> used(g.vertex_count, 0);
  used[a] = used[b] = 1;
  for (int i : idxs) {
    const Edge& e = g.edges[i];
    used[e.u] = 1;
    if (e.kind == EdgeKind::Link) used[e.v] = 1;
  }
  int next = 0;
  for (int v = 0; v < g.vertex_count; ++v)
    if (used[v]) map[v] = next++;
  std::vector<Edge> es;
  std::vector<int> lbls;
  for (int i : idxs) {
    const Edge& e = g.edges[i];
    es.push_back(Edge::link(map[e.u], map[e.v]));
    lbls.push_back(g.labels[i]);
  }
  es.push_back(Edge::link(map[a], map[b]));
  lbls.push_back(virt_label);
  return Multigraph(next, std::move(es), std::move(lbls));
}

struct Split {
  Multigraph g1, g2;
};

// A valid 2-separation: classes of some pair partitioned into two groups
// with at least two edges each.  Returns false when the term is already a
// leaf kind (the caller checks that first).
bool find_split(const Multigraph& g, int virt_label, Split* out) {
  int m = g.edge_count();
  for (int a = 0; a < g.vertex_count; ++a)
    for (int b = a + 1; b < g.vertex_count; ++b) {
      auto classes = separation_classes(g, a, b);
      int k = static_cast<int>(classes.size());
      if (k < 2) continue;
      // deterministic grouping: try the largest class alone, then prefixes
      std::sort(classes.begin(), classes.end(),
                [](const auto& x, const auto& y) {
                  return x.size() != y.size() ? x.size() > y.size() : x < y;
                });
      for (int take = 1; take < k; ++take) {
        std::vector<int> g1_idx, g2_idx;
        for (int c = 0; c < k; ++c) {
          auto& dst = c < take ? g1_idx : g2_idx;
          dst.insert(dst.end(), classes[c].begin(), classes[c].end());
        }
        if (g1_idx.size() < 2 || g2_idx.size() < 2) continue;
        (void)m;
        out->g1 = side_graph(g, g1_idx, a, b, virt_label);
        out->g2 = side_graph(g, g2_idx, a, b, virt_label);
        return true;
      }
    }
  return false;
}

}  // namespace

DecompositionTree canonical_tree_decomposition(const Multigraph& g) {
  if (g.edge_count() > 12)
    throw std::invalid_argument("canonical_tree_decomposition: more than 12 edges");
  for (const Edge& e : g.edges)
    if (e.kind != EdgeKind::Link)
      throw std::invalid_argument("canonical_tree_decomposition: input must be loopless");
  if (g.vertex_count == 2) {
    if (g.edge_count() < 3)
      throw std::invalid_argument("canonical_tree_decomposition: multilink too small");
  } else {
    if (g.vertex_count < 3 || !graph_properties(g).is_2connected)
      throw std::invalid_argument("canonical_tree_decomposition: input is separable");
  }

  DecompositionTree t;
  t.nodes.push_back({g, TermKind::ThreeConnectedSimple});
  int next_virt = -1;

  // split until every term is a leaf kind
  for (size_t i = 0; i < t.nodes.size(); ++i) {
    while (!is_leaf_term(t.nodes[i].term)) {
      Split sp;
      if (!find_split(t.nodes[i].term, next_virt, &sp))
        throw std::logic_error("canonical_tree_decomposition: no split for non-leaf term");
      int virt = next_virt--;
      int j = static_cast<int>(t.nodes.size());
      // tree edges previously at node i follow the side holding their label
      for (TreeEdge& te : t.edges) {
        bool in_g2 = sp.g2.find_label(te.virt) >= 0;
        if (te.a == static_cast<int>(i) && in_g2) te.a = j;
        if (te.b == static_cast<int>(i) && in_g2) te.b = j;
      }
      t.nodes[i].term = sp.g1;
      t.nodes.push_back({sp.g2, TermKind::ThreeConnectedSimple});
      t.edges.push_back({static_cast<int>(i), j, virt});
    }
  }
  for (TermNode& n : t.nodes) n.kind = classify_leaf(n.term);

  // merge adjacent cycle pairs and multilink pairs
  bool merged = true;
  while (merged) {
    merged = false;
    for (size_t ei = 0; ei < t.edges.size(); ++ei) {
      TreeEdge te = t.edges[ei];
      TermNode& na = t.nodes[te.a];
      TermNode& nb = t.nodes[te.b];
      if (na.kind != nb.kind || na.kind == TermKind::ThreeConnectedSimple) continue;
      na.term = two_sum(na.term, te.virt, nb.term, te.virt);
      for (TreeEdge& other : t.edges) {
        if (other.a == te.b) other.a = te.a;
        if (other.b == te.b) other.b = te.a;
      }
      nb.term = Multigraph(0, {});  // dead node, compacted below
      t.edges.erase(t.edges.begin() + ei);
      merged = true;
      break;
    }
  }

  // compact away dead nodes
  std::vector<int> remap(t.nodes.size(), -1);
  DecompositionTree out;
  for (size_t i = 0; i < t.nodes.size(); ++i) {
    if (t.nodes[i].term.edge_count() == 0) continue;
    remap[i] = static_cast<int>(out.nodes.size());
    out.nodes.push_back(std::move(t.nodes[i]));
  }
  for (TreeEdge& te : t.edges)
    out.edges.push_back({remap[te.a], remap[te.b], te.virt});
  return out;
}

namespace {

Multigraph recompose_nodes(const DecompositionTree& t,
                           const std::vector<int>& node_indices) {
  std::vector<char> in(t.nodes.size(), 0);
  for (int i : node_indices) in.at(i) = 1;
  std::vector<Multigraph> terms(t.nodes.size());
  std::vector<int> owner(t.nodes.size());
  std::iota(owner.begin(), owner.end(), 0);
  for (size_t i = 0; i < t.nodes.size(); ++i)
    if (in[i]) terms[i] = t.nodes[i].term;
  auto find = [&](int x) {
    while (owner[x] != x) x = owner[x] = owner[owner[x]];
    return x;
  };
  int sums = 0;
  for (const TreeEdge& te : t.edges) {
    if (!in[te.a] || !in[te.b]) continue;
    int ra = find(te.a), rb = find(te.b);
    terms[ra] = two_sum(terms[ra], te.virt, terms[rb], te.virt);
    owner[rb] = ra;
    terms[rb] = Multigraph(0, {});
    ++sums;
  }
  if (sums + 1 != static_cast<int>(node_indices.size()))
    throw std::invalid_argument("node selection is not a connected subtree");
  return terms[find(node_indices.at(0))];
}

}  // namespace

Multigraph recompose(const DecompositionTree& t) {
  if (t.nodes.empty()) return Multigraph(0, {});
  std::vector<int> all(t.nodes.size());
  std::iota(all.begin(), all.end(), 0);
  Multigraph g = recompose_nodes(t, all);
  for (int l : g.labels)
    if (l < 0) throw std::logic_error("recompose: dangling virtual edge");
  return g;
}

Multigraph subtree_minor(const DecompositionTree& t,
                         const std::vector<int>& node_indices) {
  if (node_indices.empty())
    throw std::invalid_argument("subtree_minor: empty node selection");
  Multigraph g = recompose_nodes(t, node_indices);
  // dangling virtual edges become fresh real edges
  int next = 0;
  for (int l : g.labels) next = std::max(next, l + 1);
  for (int& l : g.labels)
    if (l < 0) l = next++;
  return g;
}

std::string to_dot(const DecompositionTree& t) {
  std::ostringstream os;
  os << "graph decomposition {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (size_t i = 0; i < t.nodes.size(); ++i) {
    const char* kind = t.nodes[i].kind == TermKind::Cycle ? "cycle"
                       : t.nodes[i].kind == TermKind::Multilink ? "multilink"
                                                                : "3-connected";
    std::string bgr = to_bgr(t.nodes[i].term);
    std::string esc;
    for (char c : bgr) {
      if (c == '\n') esc += "\\l";
      else esc += c;
    }
    os << "  n" << i << " [label=\"" << kind << "\\l" << esc << "\"];\n";
  }
  for (const TreeEdge& te : t.edges)
    os << "  n" << te.a << " -- n" << te.b << " [label=\"" << te.virt << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace bicirc
