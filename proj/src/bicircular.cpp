#include "bicirc/bicircular.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bicirc {

namespace {

struct SpanStats {
  int touched = 0;      // vertices met by some edge of S
  int acyclic = 0;      // components of the spanned subgraph that are trees
  bool overfull = false;  // some component has two independent cycles
  bool has_free = false;
};

SpanStats span_stats(const Multigraph& g, EdgeSet s) {
  SpanStats st;
  std::vector<int> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> edge_cnt(g.vertex_count, 0), vert_seen(g.vertex_count, 0);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!(s >> i & 1)) continue;
    const Edge& e = g.edges[i];
    if (e.kind == EdgeKind::Free) {
      st.has_free = true;
      continue;
    }
    vert_seen[e.u] = 1;
    if (e.kind == EdgeKind::Link) {
      vert_seen[e.v] = 1;
      int a = find(e.u), b = find(e.v);
      if (a != b) parent[a] = b;
      edge_cnt[find(e.u)]++;
    } else {
      edge_cnt[find(e.u)]++;
    }
  }
  // consolidate counts onto final roots
  std::vector<int> edges_at(g.vertex_count, 0), verts_at(g.vertex_count, 0);
  for (int v = 0; v < g.vertex_count; ++v) {
    if (edge_cnt[v]) edges_at[find(v)] += edge_cnt[v];
    if (vert_seen[v]) {
      verts_at[find(v)]++;
      st.touched++;
    }
  }
  for (int v = 0; v < g.vertex_count; ++v) {
    if (verts_at[v] == 0) continue;
    if (edges_at[v] == verts_at[v] - 1) st.acyclic++;
    if (edges_at[v] > verts_at[v]) st.overfull = true;
  }
  return st;
}

}  // namespace

bool bicircular_independent(const Multigraph& g, EdgeSet s) {
  SpanStats st = span_stats(g, s);
  return !st.has_free && !st.overfull;
}

int bicircular_rank(const Multigraph& g, EdgeSet s) {
  SpanStats st = span_stats(g, s);
  return st.touched - st.acyclic;
}

Matroid bicircular_matroid(const Multigraph& g) {
  int n = g.edge_count();
  if (n > 20) throw std::invalid_argument("bicircular_matroid: more than 20 edges");
  int r = bicircular_rank(g, full_set(n));
  std::vector<EdgeSet> bases;
  if (r == 0) {
    bases.push_back(0);
  } else {
    EdgeSet s = full_set(r);
    EdgeSet limit = EdgeSet{1} << n;
    while (s < limit) {
      if (bicircular_independent(g, s)) bases.push_back(s);
      EdgeSet c = s & (0u - s), rip = s + c;
      s = (((rip ^ s) >> 2) / c) | rip;
    }
  }
  return from_bases(g.labels, std::move(bases));
}

// -- matrix oracle ---------------------------------------------------------

std::vector<std::vector<long long>> bicircular_matrix(const Multigraph& g) {
  static const long long primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                     31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  std::vector<std::vector<long long>> a(
      g.vertex_count, std::vector<long long>(g.edge_count(), 0));
  int next_prime = 0;
  for (int j = 0; j < g.edge_count(); ++j) {
    const Edge& e = g.edges[j];
    if (e.kind == EdgeKind::Link) {
      if (next_prime >= 20) throw std::invalid_argument("bicircular_matrix: too few primes");
      a[e.u][j] = -1;
      a[e.v][j] = primes[next_prime++];
    } else if (e.kind == EdgeKind::Loop) {
      a[e.u][j] = 1;
    }
  }
  return a;
}

namespace {

// Fraction-free elimination; entries stay integral and bounded well within
// 128 bits at these dimensions.
int int_matrix_rank(std::vector<std::vector<__int128>> a) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int rank = 0;
  __int128 prev = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c2 = c + 1; c2 < cols; ++c2)
        a[r][c2] = (a[rank][c] * a[r][c2] - a[r][c] * a[rank][c2]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

int column_rank(const std::vector<std::vector<long long>>& a, EdgeSet cols) {
  int rows = static_cast<int>(a.size());
  std::vector<std::vector<__int128>> sub(rows);
  for (int r = 0; r < rows; ++r)
    for (int j = 0; j < static_cast<int>(a[r].size()); ++j)
      if (cols >> j & 1) sub[r].push_back(a[r][j]);
  return int_matrix_rank(std::move(sub));
}

}  // namespace

Matroid matrix_matroid_of(const Multigraph& g) {
  int n = g.edge_count();
  if (n > 16) throw std::invalid_argument("matrix_matroid_of: more than 16 edges");
  auto a = bicircular_matrix(g);
  int r = column_rank(a, full_set(n));
  std::vector<EdgeSet> bases;
  if (r == 0) {
    bases.push_back(0);
  } else {
    EdgeSet s = full_set(r);
    EdgeSet limit = EdgeSet{1} << n;
    while (s < limit) {
      if (column_rank(a, s) == r) bases.push_back(s);
      EdgeSet c = s & (0u - s), rip = s + c;
      s = (((rip ^ s) >> 2) / c) | rip;
    }
  }
  return from_bases(g.labels, std::move(bases));
}

// -- graph-level contraction -----------------------------------------------

Multigraph bicircular_contract(const Multigraph& g, int label) {
  int idx = g.find_label(label);
  if (idx < 0) throw std::invalid_argument("bicircular_contract: unknown label");
  const Edge& e = g.edges[idx];
  if (e.kind == EdgeKind::Free) return delete_edge(g, label);
  if (e.kind == EdgeKind::Link) return contract_link(g, label);
  int v = e.u;
  std::vector<Edge> es;
  std::vector<int> lbls;
  auto remap = [&](int w) { return w < v ? w : w - 1; };
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == idx) continue;
    const Edge& f = g.edges[i];
    Edge out = f;
    if (f.kind == EdgeKind::Loop && f.u == v) {
      out = Edge::free_edge();
    } else if (f.kind == EdgeKind::Link && (f.u == v || f.v == v)) {
      out = Edge::loop(remap(f.u == v ? f.v : f.u));
    } else if (f.kind == EdgeKind::Link) {
      out = Edge::link(remap(f.u), remap(f.v));
    } else if (f.kind == EdgeKind::Loop) {
      out = Edge::loop(remap(f.u));
    }
    es.push_back(out);
    lbls.push_back(g.labels[i]);
  }
  return Multigraph(g.vertex_count - 1, std::move(es), std::move(lbls));
}

// -- Wagner criterion ------------------------------------------------------

bool wagner_3connected(const Multigraph& g) {
  GraphProperties p = graph_properties(g);
  if (p.has_free_edge) throw std::invalid_argument("wagner_3connected: free edges present");
  if (g.vertex_count < 3) throw std::invalid_argument("wagner_3connected: fewer than 3 vertices");
  if (!is_connected(g)) throw std::invalid_argument("wagner_3connected: graph not connected");
  if (!p.is_2connected || p.max_loops_per_vertex > 1) return false;
  for (int v = 0; v < g.vertex_count; ++v)
    if (g.degree(v) == 2) return false;
  return true;
}

// -- representation search -------------------------------------------------

namespace {

struct RepSearch {
  const Matroid& target;
  int r;                    // vertices of any representation
  int n;                    // edges
  int dmin;                 // forced minimum degree
  int max_loops;            // per vertex
  int max_mult;             // per link slot
  bool stop_at_first;
  std::vector<Edge> partial;
  std::vector<int> deg;
  std::vector<std::string> seen_forms;
  std::vector<Multigraph> found;

  RepSearch(const Matroid& m, bool first) : target(m), stop_at_first(first) {
    r = m.rank;
    n = m.n;
    // loops at one vertex are pairwise parallel in B(G), so their number is
    // capped by the largest parallel class; three parallel links form a
    // 3-circuit, so multiplicities are capped at 2 when M has no triangle
    std::vector<int> cls(std::max(n, 1));
    std::iota(cls.begin(), cls.end(), 0);
    auto find = [&](int x) {
      while (cls[x] != x) x = cls[x] = cls[cls[x]];
      return x;
    };
    bool has_triangle = false;
    for (EdgeSet c : circuits(m)) {
      int sz = popcount(c);
      if (sz == 3) has_triangle = true;
      if (sz == 2) {
        int a = __builtin_ctz(c), b = 31 - __builtin_clz(c);
        cls[find(a)] = find(b);
      }
    }
    std::vector<int> cls_size(std::max(n, 1), 0);
    int p_max = 1;
    for (int i = 0; i < n; ++i) p_max = std::max(p_max, ++cls_size[find(i)]);
    // the degree and loop constraints of the 3-connectivity criterion only
    // bind once the representation has at least 3 vertices
    bool wag = r >= 3 && is_3connected(m);
    dmin = wag ? 3 : 2;
    max_loops = wag ? 1 : p_max;
    max_mult = has_triangle ? n : 2;
    deg.assign(r, 0);
  }

  bool done() const { return stop_at_first && !found.empty(); }

  void certify() {
    Multigraph g(r, partial);
    if (!is_connected(g)) return;
    // count independent r-sets before paying for canonical forms
    size_t cnt = 0;
    EdgeSet s = full_set(r), limit = EdgeSet{1} << n;
    while (s < limit) {
      if (bicircular_independent(g, s)) ++cnt;
      EdgeSet c = s & (0u - s), rip = s + c;
      s = (((rip ^ s) >> 2) / c) | rip;
    }
    if (cnt != target.bases.size()) return;
    std::string form = canonical_form(g);
    for (const auto& f : seen_forms)
      if (f == form) return;
    seen_forms.push_back(form);
    Matroid b = bicircular_matroid(g);
    if (matroid_isomorphic(b, target)) found.push_back(std::move(g));
  }

  // Assign all edges at vertex v going to vertices >= v (loops first, then
  // links to strictly later vertices); deg[v] is final afterwards.
  void place_vertex(int v, int budget) {
    if (done()) return;
    if (v == r) {
      if (budget == 0) certify();
      return;
    }
    for (int lv = 0; lv <= std::min(max_loops, budget); ++lv) {
      deg[v] += 2 * lv;
      for (int i = 0; i < lv; ++i) partial.push_back(Edge::loop(v));
      place_links(v, v + 1, budget - lv);
      for (int i = 0; i < lv; ++i) partial.pop_back();
      deg[v] -= 2 * lv;
      if (done()) return;
    }
  }

  void place_links(int v, int w, int budget) {
    if (done()) return;
    if (w == r) {
      if (deg[v] < dmin) return;
      // degree deficits of later vertices can rise by at most 2 per edge
      int deficit = 0;
      for (int u = v + 1; u < r; ++u) deficit += std::max(0, dmin - deg[u]);
      if (deficit > 2 * budget) return;
      place_vertex(v + 1, budget);
      return;
    }
    for (int k = 0; k <= std::min(max_mult, budget); ++k) {
      deg[v] += k;
      deg[w] += k;
      for (int i = 0; i < k; ++i) partial.push_back(Edge::link(v, w));
      place_links(v, w + 1, budget - k);
      for (int i = 0; i < k; ++i) partial.pop_back();
      deg[v] -= k;
      deg[w] -= k;
      if (done()) return;
    }
  }

  void run() {
    if (n == 0) {
      found.push_back(Multigraph(0, {}));
      return;
    }
    if (n == 1) {
      // the only connected single-element matroids are U(0,1) and U(1,1)
      if (target.rank == 0) {
        found.push_back(Multigraph(0, {Edge::free_edge()}));
      } else {
        found.push_back(Multigraph(1, {Edge::loop(0)}));
        if (!stop_at_first) found.push_back(Multigraph(2, {Edge::link(0, 1)}));
      }
      return;
    }
    if (r < 1 || r >= n) return;  // connected, so no loops or coloops
    place_vertex(0, n);
    std::sort(found.begin(), found.end(),
              [](const Multigraph& a, const Multigraph& b) {
                return canonical_form(a) < canonical_form(b);
              });
  }
};

}  // namespace

std::vector<Multigraph> enumerate_representations(const Matroid& m) {
  if (m.n > 10) throw std::invalid_argument("enumerate_representations: more than 10 elements");
  if (m.n >= 2 && !is_matroid_connected(m))
    throw std::invalid_argument("enumerate_representations: matroid not connected");
  RepSearch s(m, false);
  s.run();
  return s.found;
}

namespace {

std::optional<Multigraph> connected_witness_memo(const Matroid& m) {
  static std::mutex mu;
  static std::map<std::string,
                  std::vector<std::pair<Matroid, std::optional<Multigraph>>>>
      memo;
  std::string key = invariant_key(m);
  {
    std::lock_guard<std::mutex> lock(mu);
    for (const auto& [known, result] : memo[key])
      if (matroid_isomorphic(known, m)) return result;
  }
  RepSearch s(m, true);
  s.run();
  std::optional<Multigraph> result;
  if (!s.found.empty()) result = s.found.front();
  std::lock_guard<std::mutex> lock(mu);
  memo[key].emplace_back(m, result);
  return result;
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  std::vector<Edge> es = a.edges;
  for (const Edge& e : b.edges) {
    if (e.kind == EdgeKind::Link)
      es.push_back(Edge::link(e.u + a.vertex_count, e.v + a.vertex_count));
    else if (e.kind == EdgeKind::Loop)
      es.push_back(Edge::loop(e.u + a.vertex_count));
    else
      es.push_back(e);
  }
  return Multigraph(a.vertex_count + b.vertex_count, std::move(es));
}

}  // namespace

std::optional<Multigraph> bicircular_witness(const Matroid& m) {
  if (m.n > 10) throw std::invalid_argument("bicircular_witness: more than 10 elements");
  Multigraph acc(0, {});
  for (EdgeSet comp : connected_components(m)) {
    Matroid part = delete_elements(m, full_set(m.n) & ~comp);
    auto w = connected_witness_memo(part);
    if (!w) return std::nullopt;
    acc = disjoint_union(acc, *w);
  }
  return acc;
}

bool is_bicircular(const Matroid& m) { return bicircular_witness(m).has_value(); }

bool is_cobicircular(const Matroid& m) { return bicircular_witness(dual(m)).has_value(); }

bool is_minimally_not_cobicircular(const Matroid& m) {
  if (m.n > 10) throw std::invalid_argument("is_minimally_not_cobicircular: more than 10 elements");
  if (is_cobicircular(m)) return false;
  for (int e = 0; e < m.n; ++e) {
    EdgeSet s = EdgeSet{1} << e;
    if (!is_cobicircular(delete_elements(m, s))) return false;
    if (!is_cobicircular(contract_elements(m, s))) return false;
  }
  return true;
}

}  // namespace bicirc
