#include "bicirc/matroid.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace bicirc {

bool Matroid::has_basis(EdgeSet b) const {
  return std::binary_search(bases.begin(), bases.end(), b);
}

bool Matroid::is_loop(int e) const {
  EdgeSet bit = EdgeSet{1} << e;
  for (EdgeSet b : bases)
    if (b & bit) return false;
  return true;
}

bool Matroid::is_coloop(int e) const {
  EdgeSet bit = EdgeSet{1} << e;
  for (EdgeSet b : bases)
    if (!(b & bit)) return false;
  return true;
}

namespace {

void check_exchange(const Matroid& m) {
  // exhaustive up to 12 elements, sampled triples above
  auto violates = [&](EdgeSet b1, EdgeSet b2) -> std::optional<int> {
    EdgeSet diff = b1 & ~b2;
    while (diff) {
      int x = __builtin_ctz(diff);
      diff &= diff - 1;
      EdgeSet cand = b2 & ~b1;
      bool ok = false;
      while (cand) {
        int y = __builtin_ctz(cand);
        cand &= cand - 1;
        EdgeSet b3 = (b1 & ~(EdgeSet{1} << x)) | (EdgeSet{1} << y);
        if (m.has_basis(b3)) {
          ok = true;
          break;
        }
      }
      if (!ok) return x;
    }
    return std::nullopt;
  };
  if (m.n <= 12) {
    for (EdgeSet b1 : m.bases)
      for (EdgeSet b2 : m.bases)
        if (auto x = violates(b1, b2))
          throw std::invalid_argument("basis-exchange violation at element " +
                                      std::to_string(*x));
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<size_t> pick(0, m.bases.size() - 1);
    for (int t = 0; t < 2000; ++t)
      if (auto x = violates(m.bases[pick(rng)], m.bases[pick(rng)]))
        throw std::invalid_argument("basis-exchange violation at element " +
                                    std::to_string(*x));
  }
}

}  // namespace

Matroid from_bases(std::vector<int> labels, std::vector<EdgeSet> bases) {
  if (labels.size() > 24) throw std::invalid_argument("ground set larger than 24");
  if (bases.empty()) throw std::invalid_argument("empty basis family");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  Matroid m;
  m.n = static_cast<int>(labels.size());
  m.labels = std::move(labels);
  m.rank = popcount(bases[0]);
  m.bases = std::move(bases);
  EdgeSet full = full_set(m.n);
  for (EdgeSet b : m.bases) {
    if (popcount(b) != m.rank) throw std::invalid_argument("bases of unequal cardinality");
    if (b & ~full) throw std::invalid_argument("basis uses element outside ground set");
  }
  check_exchange(m);
  return m;
}

Matroid uniform(int r, int n) {
  if (r < 0 || r > n || n > 24) throw std::invalid_argument("uniform: need 0 <= r <= n <= 24");
  std::vector<EdgeSet> bases;
  // all r-subsets via Gosper's hack
  if (r == 0) {
    bases.push_back(0);
  } else {
    EdgeSet s = full_set(r);
    EdgeSet limit = EdgeSet{1} << n;
    while (s < limit) {
      bases.push_back(s);
      EdgeSet c = s & -s, q = s + c;
      s = q | (((q ^ s) >> 2) / c);
    }
  }
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  Matroid m;
  m.n = n;
  m.labels = std::move(labels);
  m.rank = r;
  m.bases = std::move(bases);
  return m;  // exchange holds trivially, skip the check
}

int rank_of(const Matroid& m, EdgeSet s) {
  int best = 0;
  for (EdgeSet b : m.bases) best = std::max(best, popcount(s & b));
  return best;
}

Matroid dual(const Matroid& m) {
  EdgeSet full = full_set(m.n);
  Matroid d;
  d.n = m.n;
  d.labels = m.labels;
  d.rank = m.n - m.rank;
  d.bases.reserve(m.bases.size());
  for (EdgeSet b : m.bases) d.bases.push_back(full ^ b);
  std::sort(d.bases.begin(), d.bases.end());
  return d;
}

namespace {

EdgeSet compact_bits(EdgeSet b, EdgeSet removed) {
  EdgeSet out = 0;
  int pos = 0;
  for (int i = 0; i < 24; ++i) {
    EdgeSet bit = EdgeSet{1} << i;
    if (removed & bit) continue;
    if (b & bit) out |= EdgeSet{1} << pos;
    ++pos;
  }
  return out;
}

}  // namespace

Matroid delete_elements(const Matroid& m, EdgeSet s) {
  if (s & ~full_set(m.n)) throw std::invalid_argument("delete: set outside ground");
  if (s == 0) return m;
  int r2 = 0;
  for (EdgeSet b : m.bases) r2 = std::max(r2, popcount(b & ~s));
  std::vector<EdgeSet> nb;
  for (EdgeSet b : m.bases)
    if (popcount(b & ~s) == r2) nb.push_back(compact_bits(b & ~s, s));
  std::sort(nb.begin(), nb.end());
  nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  Matroid out;
  out.n = m.n - popcount(s);
  for (int i = 0; i < m.n; ++i)
    if (!(s >> i & 1)) out.labels.push_back(m.labels[i]);
  out.rank = r2;
  out.bases = std::move(nb);
  return out;
}

Matroid contract_elements(const Matroid& m, EdgeSet s) {
  return dual(delete_elements(dual(m), s));
}

std::vector<EdgeSet> circuits(const Matroid& m) {
  if (m.n > 16) throw std::invalid_argument("circuits: more than 16 elements");
  size_t total = size_t{1} << m.n;
  std::vector<char> ind(total, 0);
  for (EdgeSet b : m.bases) {
    EdgeSet s = b;
    while (true) {  // all subsets of b
      ind[s] = 1;
      if (s == 0) break;
      s = (s - 1) & b;
    }
  }
  std::vector<EdgeSet> out;
  for (EdgeSet s = 1; s < total; ++s) {
    if (ind[s]) continue;
    bool minimal = true;
    EdgeSet t = s;
    while (t && minimal) {
      int x = __builtin_ctz(t);
      t &= t - 1;
      if (!ind[s & ~(EdgeSet{1} << x)]) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

std::vector<EdgeSet> cocircuits(const Matroid& m) { return circuits(dual(m)); }

std::vector<int> circuit_size_spectrum(const Matroid& m) {
  std::vector<int> sizes;
  for (EdgeSet c : circuits(m)) sizes.push_back(popcount(c));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool is_3connected(const Matroid& m, SeparationProfile* profile) {
  if (m.n > 20) throw std::invalid_argument("is_3connected: more than 20 elements");
  if (profile) *profile = {};
  EdgeSet full = full_set(m.n);
  size_t total = size_t{1} << m.n;
  bool ok = true;
  for (EdgeSet s = 1; s + 1 < total && ok; ++s) {
    EdgeSet co = full ^ s;
    if (s > co) continue;  // each split once
    int lambda = rank_of(m, s) + rank_of(m, co) - m.rank;
    int small = std::min(popcount(s), popcount(co));
    if (lambda <= 0 && small >= 1) {
      if (profile) profile->violating_1separation = s;
      ok = false;
    } else if (lambda <= 1 && small >= 2) {
      if (profile) profile->violating_2separation = s;
      ok = false;
    }
  }
  return ok;
}

bool is_matroid_connected(const Matroid& m) {
  if (m.n <= 1) return true;
  EdgeSet full = full_set(m.n);
  size_t total = size_t{1} << m.n;
  for (EdgeSet s = 1; s + 1 < total; ++s) {
    EdgeSet co = full ^ s;
    if (s > co) continue;
    if (rank_of(m, s) + rank_of(m, co) == m.rank) return false;
  }
  return true;
}

std::vector<EdgeSet> connected_components(const Matroid& m) {
  if (m.n > 16) throw std::invalid_argument("connected_components: more than 16 elements");
  std::vector<int> parent(m.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeSet c : circuits(m)) {
    int first = __builtin_ctz(c);
    EdgeSet t = c & (c - 1);
    while (t) {
      int x = __builtin_ctz(t);
      t &= t - 1;
      parent[find(x)] = find(first);
    }
  }
  std::vector<EdgeSet> comps;
  for (int root = 0; root < m.n; ++root) {
    if (find(root) != root) continue;
    EdgeSet s = 0;
    for (int i = 0; i < m.n; ++i)
      if (find(i) == root) s |= EdgeSet{1} << i;
    comps.push_back(s);
  }
  return comps;
}

// -- isomorphism -----------------------------------------------------------

namespace {

struct IsoData {
  std::vector<int> count;                  // bases containing element i
  std::vector<std::vector<int>> cooc;      // bases containing both i and j
  std::unordered_set<EdgeSet> basis_set;
};

IsoData iso_data(const Matroid& m) {
  IsoData d;
  d.count.assign(m.n, 0);
  d.cooc.assign(m.n, std::vector<int>(m.n, 0));
  for (EdgeSet b : m.bases) {
    d.basis_set.insert(b);
    EdgeSet t = b;
    while (t) {
      int i = __builtin_ctz(t);
      t &= t - 1;
      ++d.count[i];
      EdgeSet u = t;
      while (u) {
        int j = __builtin_ctz(u);
        u &= u - 1;
        ++d.cooc[i][j];
        ++d.cooc[j][i];
      }
    }
  }
  return d;
}

struct IsoSearch {
  const Matroid *a, *b;
  IsoData da, db;
  std::vector<int> order;  // elements of a, rarest invariant first
  std::vector<int> map;    // a -> b
  std::vector<char> used;

  bool extend(size_t pos) {
    if (pos == order.size()) {
      for (EdgeSet bs : a->bases) {
        EdgeSet img = 0, t = bs;
        while (t) {
          int i = __builtin_ctz(t);
          t &= t - 1;
          img |= EdgeSet{1} << map[i];
        }
        if (!db.basis_set.count(img)) return false;
      }
      return true;
    }
    int i = order[pos];
    for (int j = 0; j < b->n; ++j) {
      if (used[j] || da.count[i] != db.count[j]) continue;
      bool ok = true;
      for (size_t q = 0; q < pos && ok; ++q)
        if (da.cooc[i][order[q]] != db.cooc[j][map[order[q]]]) ok = false;
      if (!ok) continue;
      map[i] = j;
      used[j] = 1;
      if (extend(pos + 1)) return true;
      used[j] = 0;
      map[i] = -1;
    }
    return false;
  }
};

size_t binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  size_t v = 1;
  for (int i = 0; i < r; ++i) v = v * (n - i) / (i + 1);
  return v;
}

}  // namespace

bool matroid_isomorphic(const Matroid& a, const Matroid& b, std::vector<int>* bijection) {
  if (a.n != b.n || a.rank != b.rank || a.bases.size() != b.bases.size()) return false;
  if (a.bases.size() == binom(a.n, a.rank)) {
    // both uniform
    if (bijection) {
      bijection->resize(a.n);
      std::iota(bijection->begin(), bijection->end(), 0);
    }
    return true;
  }
  IsoSearch s;
  s.a = &a;
  s.b = &b;
  s.da = iso_data(a);
  s.db = iso_data(b);
  {
    auto ca = s.da.count, cb = s.db.count;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return false;
    std::vector<int> fa, fb;
    for (int i = 0; i < a.n; ++i)
      for (int j = 0; j < a.n; ++j) {
        if (i != j) {
          fa.push_back(s.da.cooc[i][j]);
          fb.push_back(s.db.cooc[i][j]);
        }
      }
    std::sort(fa.begin(), fa.end());
    std::sort(fb.begin(), fb.end());
    if (fa != fb) return false;
  }
  // rarest basis-count class first; ties broken by element order
  std::vector<int> class_size(a.n, 0);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      if (s.da.count[j] == s.da.count[i]) ++class_size[i];
  s.order.resize(a.n);
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](int x, int y) { return class_size[x] < class_size[y]; });
  s.map.assign(a.n, -1);
  s.used.assign(a.n, 0);
  if (!s.extend(0)) return false;
  if (bijection) *bijection = s.map;
  return true;
}

std::string invariant_key(const Matroid& m) {
  IsoData d = iso_data(m);
  auto cnt = d.count;
  std::sort(cnt.begin(), cnt.end());
  std::vector<int> fl;
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) fl.push_back(d.cooc[i][j]);
  std::sort(fl.begin(), fl.end());
  std::ostringstream os;
  os << m.n << ":" << m.rank << ":" << m.bases.size() << ":";
  for (int c : cnt) os << c << ",";
  os << ":";
  for (int c : fl) os << c << ",";
  if (m.n <= 12) {
    os << ":";
    for (int c : circuit_size_spectrum(m)) os << c << ",";
  }
  return os.str();
}

Matroid parallel_extend(const Matroid& m, int e) {
  if (e < 0 || e >= m.n) throw std::invalid_argument("parallel_extend: element out of range");
  if (m.is_loop(e)) throw std::invalid_argument("parallel_extend: element is a loop");
  if (m.n + 1 > 24) throw std::invalid_argument("parallel_extend: ground set would exceed 24");
  EdgeSet ebit = EdgeSet{1} << e;
  EdgeSet nbit = EdgeSet{1} << m.n;
  std::vector<EdgeSet> nb = m.bases;
  for (EdgeSet b : m.bases)
    if (b & ebit) nb.push_back((b & ~ebit) | nbit);
  std::sort(nb.begin(), nb.end());
  Matroid out;
  out.n = m.n + 1;
  out.labels = m.labels;
  int fresh = 0;
  while (std::find(out.labels.begin(), out.labels.end(), fresh) != out.labels.end()) ++fresh;
  out.labels.push_back(fresh);
  out.rank = m.rank;
  out.bases = std::move(nb);
  return out;
}

Matroid coparallel_extend(const Matroid& m, int e) {
  if (e < 0 || e >= m.n) throw std::invalid_argument("coparallel_extend: element out of range");
  if (m.is_loop(e)) throw std::invalid_argument("coparallel_extend: element is a loop");
  return dual(parallel_extend(dual(m), e));
}

Matroid graphic_matroid(const Multigraph& g) {
  if (g.edge_count() > 20) throw std::invalid_argument("graphic_matroid: more than 20 edges");
  for (const Edge& e : g.edges)
    if (e.kind == EdgeKind::Free)
      throw std::invalid_argument("graphic_matroid: free edge present");
  // rank = vertices - components (isolated vertices included)
  std::vector<int> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges)
    if (e.kind == EdgeKind::Link) parent[find(e.u)] = find(e.v);
  int comps = 0;
  for (int v = 0; v < g.vertex_count; ++v) comps += find(v) == v;
  int r = g.vertex_count - comps;

  int n = g.edge_count();
  std::vector<EdgeSet> bases;
  EdgeSet limit = EdgeSet{1} << n;
  auto acyclic = [&](EdgeSet s) {
    std::vector<int> p(g.vertex_count);
    std::iota(p.begin(), p.end(), 0);
    auto f = [&](int x) {
      while (p[x] != x) x = p[x] = p[p[x]];
      return x;
    };
    EdgeSet t = s;
    while (t) {
      int i = __builtin_ctz(t);
      t &= t - 1;
      const Edge& e = g.edges[i];
      if (e.kind == EdgeKind::Loop) return false;
      int a = f(e.u), b = f(e.v);
      if (a == b) return false;
      p[a] = b;
    }
    return true;
  };
  if (r == 0) {
    bases.push_back(0);
  } else {
    EdgeSet s = full_set(r);
    while (s < limit) {
      if (acyclic(s)) bases.push_back(s);
      EdgeSet c = s & -s, q = s + c;
      s = q | (((q ^ s) >> 2) / c);
    }
  }
  return from_bases(g.labels, std::move(bases));
}

Matroid whirl3() {
  // wheel on hub 0 and rim 1,2,3: spokes 0,1,2 then rim edges 3,4,5;
  // relaxing the rim circuit of the cycle matroid gives the whirl
  Multigraph wheel(4, {Edge::link(0, 1), Edge::link(0, 2), Edge::link(0, 3),
                       Edge::link(1, 2), Edge::link(2, 3), Edge::link(3, 1)});
  Matroid cyc = graphic_matroid(wheel);
  std::vector<EdgeSet> bases = cyc.bases;
  bases.push_back(0b111000);  // the rim becomes independent
  return from_bases(cyc.labels, std::move(bases));
}

// -- .mtd format -----------------------------------------------------------

std::string to_mtd(const Matroid& m) {
  std::ostringstream os;
  os << "ground " << m.n << "\n";
  os << "labels";
  for (int l : m.labels) os << " " << l;
  os << "\n";
  for (EdgeSet b : m.bases) {
    os << "basis";
    EdgeSet t = b;
    while (t) {
      int i = __builtin_ctz(t);
      t &= t - 1;
      os << " " << i;
    }
    os << "\n";
  }
  return os.str();
}

Matroid parse_mtd(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int n = -1;
  std::vector<int> labels;
  std::vector<EdgeSet> bases;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    size_t h = line.find('#');
    if (h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument(".mtd parse error at line " + std::to_string(lineno) + ": " + why);
    };
    if (tok == "ground") {
      if (!(ls >> n) || n < 0 || n > 24) fail("bad ground size");
    } else if (tok == "labels") {
      int l;
      while (ls >> l) labels.push_back(l);
    } else if (tok == "basis") {
      if (n < 0) fail("basis before ground line");
      EdgeSet b = 0;
      int i;
      while (ls >> i) {
        if (i < 0 || i >= n) fail("basis index out of range");
        b |= EdgeSet{1} << i;
      }
      if (!bases.empty() && popcount(b) != popcount(bases.front()))
        fail("bases of unequal cardinality");
      bases.push_back(b);
    } else {
      fail("unknown directive '" + tok + "'");
    }
  }
  if (n < 0) throw std::invalid_argument(".mtd parse error: missing ground line");
  if (labels.empty()) {
    labels.resize(n);
    std::iota(labels.begin(), labels.end(), 0);
  }
  if (static_cast<int>(labels.size()) != n)
    throw std::invalid_argument(".mtd parse error: label count mismatch");
  return from_bases(std::move(labels), std::move(bases));
}

Matroid load_mtd(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_mtd(ss.str());
}

}  // namespace bicirc
