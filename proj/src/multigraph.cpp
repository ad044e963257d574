#include "bicirc/multigraph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace bicirc {

Multigraph::Multigraph(int n, std::vector<Edge> es) : vertex_count(n), edges(std::move(es)) {
  labels.resize(edges.size());
  std::iota(labels.begin(), labels.end(), 0);
  validate();
}

Multigraph::Multigraph(int n, std::vector<Edge> es, std::vector<int> lbls)
    : vertex_count(n), edges(std::move(es)), labels(std::move(lbls)) {
  validate();
}

void Multigraph::validate() const {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  if (labels.size() != edges.size()) throw std::invalid_argument("label/edge size mismatch");
  std::unordered_set<int> seen;
  for (int l : labels)
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate edge label");
  for (const Edge& e : edges) {
    switch (e.kind) {
      case EdgeKind::Link:
        if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
          throw std::invalid_argument("link endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("link endpoints must be distinct");
        break;
      case EdgeKind::Loop:
        if (e.u < 0 || e.u >= vertex_count)
          throw std::invalid_argument("loop vertex out of range");
        break;
      case EdgeKind::Free:
        break;
    }
  }
}

int Multigraph::find_label(int label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  return -1;
}

int Multigraph::degree(int v) const {
  int d = 0;
  for (const Edge& e : edges) {
    if (e.kind == EdgeKind::Link && (e.u == v || e.v == v)) ++d;
    if (e.kind == EdgeKind::Loop && e.u == v) d += 2;
  }
  return d;
}

Multigraph delete_edge(const Multigraph& g, int label) {
  int idx = g.find_label(label);
  if (idx < 0) throw std::invalid_argument("delete_edge: unknown label");
  Multigraph out = g;
  out.edges.erase(out.edges.begin() + idx);
  out.labels.erase(out.labels.begin() + idx);
  return out;
}

Multigraph contract_link(const Multigraph& g, int label) {
  int idx = g.find_label(label);
  if (idx < 0) throw std::invalid_argument("contract_link: unknown label");
  const Edge& e = g.edges[idx];
  if (e.kind != EdgeKind::Link) throw std::invalid_argument("contract_link: edge is not a link");
  int keep = std::min(e.u, e.v), drop = std::max(e.u, e.v);
  auto remap = [&](int w) {
    if (w == drop) w = keep;
    return w > drop ? w - 1 : w;
  };
  std::vector<Edge> es;
  std::vector<int> lbls;
  for (size_t i = 0; i < g.edges.size(); ++i) {
    if (static_cast<int>(i) == idx) continue;
    Edge x = g.edges[i];
    if (x.kind == EdgeKind::Link) {
      int a = remap(x.u), b = remap(x.v);
      x = (a == b) ? Edge::loop(a) : Edge::link(a, b);
    } else if (x.kind == EdgeKind::Loop) {
      x = Edge::loop(remap(x.u));
    }
    es.push_back(x);
    lbls.push_back(g.labels[i]);
  }
  return Multigraph(g.vertex_count - 1, std::move(es), std::move(lbls));
}

GraphProperties graph_properties(const Multigraph& g) {
  GraphProperties p;
  p.min_degree = g.vertex_count == 0 ? 0 : g.degree(0);
  std::vector<int> loops(g.vertex_count, 0);
  for (int v = 0; v < g.vertex_count; ++v) p.min_degree = std::min(p.min_degree, g.degree(v));
  for (const Edge& e : g.edges) {
    if (e.kind == EdgeKind::Free) p.has_free_edge = true;
    if (e.kind == EdgeKind::Loop) ++loops[e.u];
  }
  p.max_loops_per_vertex = loops.empty() ? 0 : *std::max_element(loops.begin(), loops.end());

  // 2-connected: either the 2-vertex multilink case (>=2 parallel links), or
  // >=3 vertices, connected and without a cutvertex.
  if (g.vertex_count == 2) {
    int links = 0;
    for (const Edge& e : g.edges) links += e.kind == EdgeKind::Link;
    p.is_2connected = links >= 2;
  } else if (g.vertex_count >= 3 && is_connected(g)) {
    bool cut = false;
    for (int x = 0; x < g.vertex_count && !cut; ++x) {
      // connectivity of G - x
      std::vector<int> comp(g.vertex_count, -1);
      int start = x == 0 ? 1 : 0;
      std::vector<int> stack{start};
      comp[start] = 0;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const Edge& e : g.edges) {
          if (e.kind != EdgeKind::Link || e.u == x || e.v == x) continue;
          int w = -1;
          if (e.u == u) w = e.v;
          if (e.v == u) w = e.u;
          if (w >= 0 && comp[w] < 0) {
            comp[w] = 0;
            stack.push_back(w);
          }
        }
      }
      for (int v = 0; v < g.vertex_count; ++v)
        if (v != x && comp[v] < 0) cut = true;
    }
    p.is_2connected = !cut;
  }
  return p;
}

bool is_connected(const Multigraph& g) {
  if (g.vertex_count <= 1) return true;
  std::vector<char> seen(g.vertex_count, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (const Edge& e : g.edges) {
      if (e.kind != EdgeKind::Link) continue;
      int w = -1;
      if (e.u == u) w = e.v;
      if (e.v == u) w = e.u;
      if (w >= 0 && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool is_vertex_3connected(const Multigraph& g) {
  if (g.vertex_count < 4) return false;
  if (!is_connected(g)) return false;
  for (int x = 0; x < g.vertex_count; ++x) {
    for (int y = x + 1; y < g.vertex_count; ++y) {
      int start = -1;
      for (int v = 0; v < g.vertex_count; ++v)
        if (v != x && v != y) {
          start = v;
          break;
        }
      std::vector<char> seen(g.vertex_count, 0);
      std::vector<int> stack{start};
      seen[start] = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const Edge& e : g.edges) {
          if (e.kind != EdgeKind::Link) continue;
          if (e.u == x || e.v == x || e.u == y || e.v == y) continue;
          int w = -1;
          if (e.u == u) w = e.v;
          if (e.v == u) w = e.u;
          if (w >= 0 && !seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
        }
      }
      for (int v = 0; v < g.vertex_count; ++v)
        if (v != x && v != y && !seen[v]) return false;
    }
  }
  return true;
}

Multigraph relabel_vertices(const Multigraph& g, const std::vector<int>& perm) {
  std::vector<Edge> es;
  es.reserve(g.edges.size());
  for (const Edge& e : g.edges) {
    if (e.kind == EdgeKind::Link)
      es.push_back(Edge::link(perm[e.u], perm[e.v]));
    else if (e.kind == EdgeKind::Loop)
      es.push_back(Edge::loop(perm[e.u]));
    else
      es.push_back(e);
  }
  return Multigraph(g.vertex_count, std::move(es), g.labels);
}

Multigraph strip_loops(const Multigraph& g) {
  std::vector<Edge> es;
  std::vector<int> lbls;
  for (size_t i = 0; i < g.edges.size(); ++i) {
    if (g.edges[i].kind == EdgeKind::Loop) continue;
    es.push_back(g.edges[i]);
    lbls.push_back(g.labels[i]);
  }
  return Multigraph(g.vertex_count, std::move(es), std::move(lbls));
}

// -- canonical form --------------------------------------------------------

namespace {

struct CanonState {
  int nv;
  std::vector<std::vector<uint8_t>> mult;  // link multiplicity matrix
  std::vector<uint8_t> loops;
  int free_count;

  std::string best;  // lexicographically largest encoding seen

  std::vector<int> order;
  std::vector<char> used;

  // encoding per position i: [loops(order[i]), mult(order[i],order[0]), ...,
  // mult(order[i],order[i-1])]
  void search(size_t pos, const std::string& prefix) {
    if (pos == static_cast<size_t>(nv)) {
      if (prefix > best) best = prefix;
      return;
    }
    for (int v = 0; v < nv; ++v) {
      if (used[v]) continue;
      std::string seg;
      seg.push_back(static_cast<char>(loops[v]));
      for (size_t j = 0; j < pos; ++j) seg.push_back(static_cast<char>(mult[v][order[j]]));
      // prune only when the prefix matches the current best head-for-head
      bool cmp_valid = best.size() >= prefix.size() + seg.size() &&
                       best.compare(0, prefix.size(), prefix) == 0;
      if (cmp_valid && best.compare(prefix.size(), seg.size(), seg) > 0) continue;
      order[pos] = v;
      used[v] = 1;
      search(pos + 1, prefix + seg);
      used[v] = 0;
    }
  }
};

}  // namespace

std::string canonical_form(const Multigraph& g) {
  if (g.vertex_count > 10) throw std::invalid_argument("canonical_form: more than 10 vertices");
  CanonState st;
  st.nv = g.vertex_count;
  st.mult.assign(st.nv, std::vector<uint8_t>(st.nv, 0));
  st.loops.assign(st.nv, 0);
  st.free_count = 0;
  for (const Edge& e : g.edges) {
    if (e.kind == EdgeKind::Link) {
      ++st.mult[e.u][e.v];
      ++st.mult[e.v][e.u];
    } else if (e.kind == EdgeKind::Loop) {
      ++st.loops[e.u];
    } else {
      ++st.free_count;
    }
  }
  st.order.assign(st.nv, -1);
  st.used.assign(st.nv, 0);
  std::string head;
  head.push_back(static_cast<char>(st.nv));
  head.push_back(static_cast<char>(st.free_count));
  st.best.clear();
  st.search(0, head);
  return st.best.empty() ? head : st.best;
}

bool is_isomorphic(const Multigraph& g, const Multigraph& h) {
  if (g.vertex_count != h.vertex_count || g.edges.size() != h.edges.size()) return false;
  return canonical_form(g) == canonical_form(h);
}

// -- graph minors ----------------------------------------------------------

Multigraph drop_isolated_vertices(const Multigraph& g) {
  std::vector<char> touched(g.vertex_count, 0);
  for (const Edge& e : g.edges) {
    if (e.kind == EdgeKind::Link) touched[e.u] = touched[e.v] = 1;
    if (e.kind == EdgeKind::Loop) touched[e.u] = 1;
  }
  std::vector<int> map(g.vertex_count, -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count; ++v)
    if (touched[v]) map[v] = next++;
  std::vector<Edge> es;
  for (const Edge& e : g.edges) {
    if (e.kind == EdgeKind::Link)
      es.push_back(Edge::link(map[e.u], map[e.v]));
    else if (e.kind == EdgeKind::Loop)
      es.push_back(Edge::loop(map[e.u]));
    else
      es.push_back(e);
  }
  return Multigraph(next, std::move(es), g.labels);
}

namespace {

struct MinorSearch {
  std::string target_canon;
  int target_edges;
  int target_verts;  // after dropping isolated vertices
  std::unordered_set<std::string> visited;

  bool search(const Multigraph& g, std::vector<MinorOp>* witness) {
    Multigraph cur = drop_isolated_vertices(g);
    // each vertex reduction consumes one contracted edge
    if (cur.vertex_count < target_verts ||
        cur.edge_count() < target_edges + (cur.vertex_count - target_verts))
      return false;
    std::string cf = canonical_form(cur);
    if (!visited.insert(cf).second) return false;
    if (cur.edge_count() == target_edges && cur.vertex_count == target_verts &&
        cf == target_canon)
      return true;
    for (size_t i = 0; i < cur.edges.size(); ++i) {
      if (witness) witness->push_back({MinorOp::DeleteEdge, cur.labels[i]});
      if (search(delete_edge(cur, cur.labels[i]), witness)) return true;
      if (witness) witness->pop_back();
      if (cur.edges[i].kind == EdgeKind::Link && cur.vertex_count > target_verts) {
        if (witness) witness->push_back({MinorOp::ContractLink, cur.labels[i]});
        if (search(contract_link(cur, cur.labels[i]), witness)) return true;
        if (witness) witness->pop_back();
      }
    }
    return false;
  }
};

}  // namespace

bool graph_minor_contains(const Multigraph& g, const Multigraph& h,
                          std::vector<MinorOp>* witness) {
  if (g.edge_count() > 12 || h.edge_count() > 12)
    throw std::invalid_argument("graph_minor_contains: more than 12 edges");
  MinorSearch ms;
  Multigraph ht = drop_isolated_vertices(h);
  ms.target_canon = canonical_form(ht);
  ms.target_edges = ht.edge_count();
  ms.target_verts = ht.vertex_count;
  if (witness) witness->clear();
  return ms.search(g, witness);
}

Multigraph apply_minor_ops(const Multigraph& g, const std::vector<MinorOp>& ops) {
  Multigraph cur = g;
  for (const MinorOp& op : ops)
    cur = op.kind == MinorOp::DeleteEdge ? delete_edge(cur, op.label)
                                         : contract_link(cur, op.label);
  return cur;
}

// -- .bgr format -----------------------------------------------------------

std::string to_bgr(const Multigraph& g) {
  std::ostringstream os;
  os << "vertices " << g.vertex_count << "\n";
  for (const Edge& e : g.edges) {
    if (e.kind == EdgeKind::Link)
      os << "link " << e.u << " " << e.v << "\n";
    else if (e.kind == EdgeKind::Loop)
      os << "loop " << e.u << "\n";
    else
      os << "free\n";
  }
  return os.str();
}

Multigraph parse_bgr(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int nv = -1;
  std::vector<Edge> es;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    size_t h = line.find('#');
    if (h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument(".bgr parse error at line " + std::to_string(lineno) + ": " + why);
    };
    if (tok == "vertices") {
      if (nv >= 0) fail("duplicate vertices line");
      if (!(ls >> nv) || nv < 0) fail("bad vertex count");
    } else if (tok == "link") {
      int u, v;
      if (nv < 0) fail("edge before vertices line");
      if (!(ls >> u >> v)) fail("bad link line");
      es.push_back(Edge::link(u, v));
    } else if (tok == "loop") {
      int v;
      if (nv < 0) fail("edge before vertices line");
      if (!(ls >> v)) fail("bad loop line");
      es.push_back(Edge::loop(v));
    } else if (tok == "free") {
      if (nv < 0) fail("edge before vertices line");
      es.push_back(Edge::free_edge());
    } else {
      fail("unknown directive '" + tok + "'");
    }
  }
  if (nv < 0) throw std::invalid_argument(".bgr parse error: missing vertices line");
  return Multigraph(nv, std::move(es));
}

Multigraph load_bgr(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_bgr(ss.str());
}

}  // namespace bicirc
