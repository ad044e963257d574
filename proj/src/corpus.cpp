#include "bicirc/corpus.hpp"

#include <algorithm>
#include <set>

#include "bicirc/bicircular.hpp"
#include "bicirc/matroid.hpp"

namespace bicirc {

namespace {

struct Gen {
  const CorpusParams& p;
  int nv;
  std::vector<Edge> partial;
  std::vector<int> deg;
  std::set<std::string>& seen;
  std::vector<Multigraph>& out;

  Gen(const CorpusParams& p_, int nv_, std::set<std::string>& seen_,
      std::vector<Multigraph>& out_)
      : p(p_), nv(nv_), seen(seen_), out(out_) {
    deg.assign(nv, 0);
  }

  void emit() {
    int m = static_cast<int>(partial.size());
    if (m < p.min_edges) return;
    Multigraph g(nv, partial);
    if (nv > 1 && !is_connected(g)) return;
    if (p.require_2connected && !graph_properties(g).is_2connected) return;
    std::string form = canonical_form(g);
    if (!seen.insert(form).second) return;
    out.push_back(g);
    if (p.with_free_variant && m + 1 <= p.max_edges) {
      Multigraph h = g;
      h.edges.push_back(Edge::free_edge());
      h.labels.push_back(m);
      out.push_back(h);
    }
  }

  void place_vertex(int v) {
    if (v == nv) {
      emit();
      return;
    }
    int budget = p.max_edges - static_cast<int>(partial.size());
    for (int lv = 0; lv <= std::min(p.max_loops_per_vertex, budget); ++lv) {
      deg[v] += 2 * lv;
      for (int i = 0; i < lv; ++i) partial.push_back(Edge::loop(v));
      place_links(v, v + 1);
      for (int i = 0; i < lv; ++i) partial.pop_back();
      deg[v] -= 2 * lv;
    }
  }

  void place_links(int v, int w) {
    if (w == nv) {
      if (deg[v] < p.min_degree) return;
      int budget = p.max_edges - static_cast<int>(partial.size());
      int deficit = 0;
      for (int u = v + 1; u < nv; ++u) deficit += std::max(0, p.min_degree - deg[u]);
      if (deficit > 2 * budget) return;
      place_vertex(v + 1);
      return;
    }
    int budget = p.max_edges - static_cast<int>(partial.size());
    for (int k = 0; k <= budget; ++k) {
      deg[v] += k;
      deg[w] += k;
      for (int i = 0; i < k; ++i) partial.push_back(Edge::link(v, w));
      place_links(v, w + 1);
      for (int i = 0; i < k; ++i) partial.pop_back();
      deg[v] -= k;
      deg[w] -= k;
    }
  }
};

}  // namespace

std::vector<Multigraph> generate_corpus(const CorpusParams& p) {
  std::vector<Multigraph> out;
  std::set<std::string> seen;
  for (int nv = p.min_vertices; nv <= p.max_vertices; ++nv) {
    // degree sum is twice the edge count
    if (static_cast<long long>(nv) * p.min_degree > 2LL * p.max_edges) break;
    Gen g(p, nv, seen, out);
    g.place_vertex(0);
  }
  return out;
}

std::vector<Multigraph> three_connected_corpus(int max_edges) {
  std::vector<Multigraph> out;
  // 1 and 2 vertices: decided directly on the matroid
  {
    CorpusParams tiny;
    tiny.min_vertices = 1;
    tiny.max_vertices = 2;
    tiny.max_edges = max_edges;
    for (const Multigraph& g : generate_corpus(tiny))
      if (is_3connected(bicircular_matroid(g))) out.push_back(g);
  }
  // 3 or more vertices: the degree criterion characterizes 3-connectivity
  {
    CorpusParams p;
    p.min_vertices = 3;
    p.max_vertices = 2 * max_edges / 3;  // min degree 3 bounds the vertex count
    p.max_edges = max_edges;
    p.min_degree = 3;
    p.max_loops_per_vertex = 1;
    p.require_2connected = true;
    for (const Multigraph& g : generate_corpus(p))
      if (wagner_3connected(g)) out.push_back(g);
  }
  return out;
}

}  // namespace bicirc
