#include "bicirc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bicirc/bicircular.hpp"
#include "bicirc/corpus.hpp"
#include "bicirc/named_graphs.hpp"
#include "json.hpp"

namespace bicirc {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
      .count();
}

VerificationReport skipped(const std::string& id, const std::string& reason,
                           Clock::time_point t0) {
  return {id, "skipped(" + reason + ")", {}, std::nullopt, ms_since(t0)};
}

VerificationReport failed(const std::string& id, const std::string& counter,
                          Clock::time_point t0) {
  return {id, "fail", {}, counter, ms_since(t0)};
}

std::string graph_payload(const std::string& tag, const Multigraph& g) {
  return "# " + tag + "\n" + to_bgr(g);
}

}  // namespace

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const VerificationReport& r : reports) {
    nlohmann::ordered_json o;
    o["check_id"] = r.check_id;
    o["status"] = r.status;
    o["witnesses"] = r.witnesses;
    if (r.counterexample)
      o["counterexample"] = *r.counterexample;
    else
      o["counterexample"] = nullptr;
    o["elapsed_ms"] = r.elapsed_ms;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

// -- builtin matroids ------------------------------------------------------

Matroid builtin_matroid(const std::string& name) {
  if (name == "U2,6p") return coparallel_extend(uniform(2, 6), 0);
  if (name == "U2,5pp")
    return coparallel_extend(coparallel_extend(uniform(2, 5), 0), 1);
  if (name == "MK23") return graphic_matroid(build_named("K23"));
  if (name == "T223") return bicircular_matroid(build_named("T_2_2_3"));
  if (name == "T222p") return bicircular_matroid(t222_prime());
  if (name == "W3") return whirl3();
  if (name == "W4") return bicircular_matroid(build_named("W4"));
  if (name == "K4l") return bicircular_matroid(build_named("K4l"));
  if (name == "D4ll") return bicircular_matroid(build_named("D4ll"));
  if (name.size() >= 4 && name[0] == 'U') {
    size_t comma = name.find(',');
    if (comma != std::string::npos) {
      try {
        int r = std::stoi(name.substr(1, comma - 1));
        int n = std::stoi(name.substr(comma + 1));
        return uniform(r, n);
      } catch (const std::exception&) {
      }
    }
  }
  throw std::invalid_argument("unknown builtin matroid '" + name + "'");
}

std::vector<std::string> builtin_matroid_names() {
  return {"U2,7", "U2,6p", "U2,5pp", "MK23", "T223",
          "T222p", "W3",    "W4",     "K4l",  "D4ll"};
}

namespace {

// the nine excluded minors of the characterization
std::vector<std::string> excluded_minor_names() {
  return {"U2,7", "U2,6p", "U2,5pp", "MK23", "T223",
          "T222p", "W4",    "K4l",    "D4ll"};
}

}  // namespace

// -- matroid minor search --------------------------------------------------

namespace {

struct MinorMemo {
  std::map<std::string, std::vector<Matroid>> failed;
};

bool minor_search(const Matroid& cur, const Matroid& target, MinorMemo& memo,
                  std::vector<std::pair<char, int>>* witness) {
  if (cur.n == target.n) return matroid_isomorphic(cur, target);
  if (target.rank > cur.rank || target.n - target.rank > cur.n - cur.rank)
    return false;
  std::string key = invariant_key(cur);
  auto it = memo.failed.find(key);
  if (it != memo.failed.end())
    for (const Matroid& known : it->second)
      if (matroid_isomorphic(known, cur)) return false;
  for (int e = 0; e < cur.n; ++e) {
    EdgeSet s = EdgeSet{1} << e;
    if (witness) witness->push_back({'d', cur.labels[e]});
    if (minor_search(delete_elements(cur, s), target, memo, witness)) return true;
    if (witness) witness->back() = {'c', cur.labels[e]};
    if (minor_search(contract_elements(cur, s), target, memo, witness)) return true;
    if (witness) witness->pop_back();
  }
  memo.failed[key].push_back(cur);
  return false;
}

}  // namespace

bool matroid_minor_contains(const Matroid& m, const Matroid& target,
                            std::vector<std::pair<char, int>>* witness) {
  if (m.n > 14) throw std::invalid_argument("matroid_minor_contains: host over 14 elements");
  if (target.n > 10) throw std::invalid_argument("matroid_minor_contains: target over 10 elements");
  MinorMemo memo;
  if (witness) witness->clear();
  return minor_search(m, target, memo, witness);
}

// -- bicircular minor closure ----------------------------------------------

namespace {

// Every bicircular minor of the hosts, up to graph isomorphism; the matroid
// index keeps B(H) for closure members with at most index_edges edges.
// Sound because deletion and bicircular contraction commute with B.
struct MinorClosure {
  std::map<int, std::vector<Matroid>> by_size;

  bool contains(const Matroid& m) const {
    auto it = by_size.find(m.n);
    if (it == by_size.end()) return false;
    for (const Matroid& c : it->second)
      if (c.rank == m.rank && c.bases.size() == m.bases.size() &&
          matroid_isomorphic(c, m))
        return true;
    return false;
  }
};

MinorClosure build_closure(const std::vector<Multigraph>& hosts, int index_edges) {
  std::set<std::string> seen;
  std::vector<Multigraph> stack;
  MinorClosure cl;
  for (const Multigraph& h : hosts) {
    std::string f = canonical_form(drop_isolated_vertices(h));
    if (seen.insert(f).second) stack.push_back(h);
  }
  while (!stack.empty()) {
    Multigraph g = std::move(stack.back());
    stack.pop_back();
    if (g.edge_count() <= index_edges)
      cl.by_size[g.edge_count()].push_back(bicircular_matroid(g));
    if (g.edge_count() == 0) continue;
    for (int i = 0; i < g.edge_count(); ++i) {
      int lbl = g.labels[i];
      for (int op = 0; op < 2; ++op) {
        Multigraph child = op ? bicircular_contract(g, lbl) : delete_edge(g, lbl);
        child = drop_isolated_vertices(child);
        std::string f = canonical_form(child);
        if (seen.insert(f).second) stack.push_back(child);
      }
    }
  }
  return cl;
}

}  // namespace

// -- checks ----------------------------------------------------------------

VerificationReport check_self_dualities(bool corrupt) {
  auto t0 = Clock::now();
  const std::string id = "check_self_dualities";
  if (!figure_graphs_available())
    return skipped(id, "figure graph data unavailable", t0);
  VerificationReport rep{id, "pass", {}, std::nullopt, 0};
  for (const char* name : {"K4++", "N8", "O8", "F10"}) {
    Multigraph g = build_named(name);
    Matroid b = bicircular_matroid(g);
    if (!matroid_isomorphic(b, dual(b)))
      return failed(id, graph_payload(std::string(name) + " not self-dual", g), t0);
    rep.witnesses.push_back(graph_payload(std::string(name) + " self-dual", g));
  }
  Multigraph z8 = build_named("Z8");
  if (corrupt) {
    // negative control: break one edge of the pair
    z8.edges[0] = Edge::loop(0);
  }
  Multigraph z8d = build_named("Z8d");
  if (!matroid_isomorphic(dual(bicircular_matroid(z8)), bicircular_matroid(z8d)))
    return failed(id, graph_payload("dual pair mismatch", z8), t0);
  rep.witnesses.push_back(graph_payload("dual pair", z8));
  rep.witnesses.push_back(graph_payload("dual pair partner", z8d));
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

VerificationReport check_free_swirls(int n_max, bool corrupt) {
  auto t0 = Clock::now();
  const std::string id = "check_free_swirls";
  if (n_max < 3 || n_max > 7)
    throw std::invalid_argument("check_free_swirls: n_max must be between 3 and 7");
  VerificationReport rep{id, "pass", {}, std::nullopt, 0};
  for (int n = 3; n <= n_max; ++n) {
    Multigraph g = build_named("2C" + std::to_string(n));
    if (corrupt && n == 4) g.edges[0] = Edge::loop(0);
    Matroid b = bicircular_matroid(g);
    EdgeSet full = full_set(b.n);
    for (EdgeSet basis : b.bases)
      if (!b.has_basis(full & ~basis))
        return failed(id, graph_payload("basis complement not a basis, n=" + std::to_string(n), g), t0);
    if (!is_3connected(b))
      return failed(id, graph_payload("not 3-connected, n=" + std::to_string(n), g), t0);
    rep.witnesses.push_back(graph_payload("identically self-dual", g));
  }
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

VerificationReport check_excluded_minors(bool corrupt) {
  auto t0 = Clock::now();
  const std::string id = "check_excluded_minors";
  if (!figure_graphs_available())
    return skipped(id, "figure graph data unavailable", t0);
  VerificationReport rep{id, "pass", {}, std::nullopt, 0};
  for (const std::string& name : excluded_minor_names()) {
    Matroid m = corrupt && name == "U2,7" ? uniform(2, 6) : builtin_matroid(name);
    auto w = bicircular_witness(m);
    if (!w) return failed(id, name + " is not bicircular", t0);
    rep.witnesses.push_back(graph_payload(name + " bicircular via", *w));
    if (is_cobicircular(m))
      return failed(id, name + " is cobicircular", t0);
    for (int e = 0; e < m.n; ++e) {
      EdgeSet s = EdgeSet{1} << e;
      for (int op = 0; op < 2; ++op) {
        Matroid minor = op ? contract_elements(m, s) : delete_elements(m, s);
        auto cw = bicircular_witness(dual(minor));
        if (!cw)
          return failed(id, name + (op ? "/" : "\\") + std::to_string(m.labels[e]) +
                                " not cobicircular",
                        t0);
        rep.witnesses.push_back(graph_payload(
            name + (op ? "/" : "\\") + std::to_string(m.labels[e]) +
                " cobicircular via",
            *cw));
      }
    }
  }
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

VerificationReport check_representation_catalogs(bool corrupt) {
  auto t0 = Clock::now();
  const std::string id = "check_representation_catalogs";
  VerificationReport rep{id, "pass", {}, std::nullopt, 0};

  auto catalog = [&](const Matroid& m) { return enumerate_representations(m); };
  auto recertify = [&](const Matroid& m, const std::vector<Multigraph>& reps) {
    for (const Multigraph& g : reps)
      if (!matroid_isomorphic(matrix_matroid_of(g), m)) return false;
    return true;
  };
  auto exact_set = [&](const std::string& tag, const Matroid& m,
                       const std::vector<std::string>& names) -> std::optional<std::string> {
    auto reps = catalog(m);
    if (!recertify(m, reps)) return tag + ": matrix oracle disagrees";
    std::set<std::string> got, want;
    for (const Multigraph& g : reps) got.insert(canonical_form(g));
    for (const std::string& n : names) want.insert(canonical_form(build_named(n)));
    if (got != want)
      return tag + ": catalog has " + std::to_string(got.size()) +
             " graphs, expected exactly {" + [&] {
               std::string s;
               for (const std::string& n : names) s += n + " ";
               return s;
             }() + "}";
    for (const Multigraph& g : reps)
      rep.witnesses.push_back(graph_payload(tag + " representation", g));
    return std::nullopt;
  };
  auto exact_count = [&](const std::string& tag, const Matroid& m,
                         size_t count) -> std::optional<std::string> {
    auto reps = catalog(m);
    if (!recertify(m, reps)) return tag + ": matrix oracle disagrees";
    if (reps.size() != count)
      return tag + ": catalog has " + std::to_string(reps.size()) +
             " graphs, expected " + std::to_string(count);
    for (const Multigraph& g : reps)
      rep.witnesses.push_back(graph_payload(tag + " representation", g));
    return std::nullopt;
  };

  Matroid u46 = corrupt ? uniform(3, 6) : uniform(4, 6);
  if (auto err = exact_set("U4,6", u46, {"C4++", "K4"})) return failed(id, *err, t0);
  for (const Multigraph& g : catalog(u46))
    for (const Edge& e : g.edges)
      if (e.kind != EdgeKind::Link)
        return failed(id, "U4,6 representation with a loop", t0);
  if (auto err = exact_set("U3,6", uniform(3, 6), {"T_2_2_2"})) return failed(id, *err, t0);
  if (auto err = exact_set("W3", whirl3(), {"C3o"})) return failed(id, *err, t0);
  if (auto err = exact_set("U2,7", uniform(2, 7), {"7K2", "6K2l", "5K2o"}))
    return failed(id, *err, t0);
  if (auto err = exact_count("MK23", builtin_matroid("MK23"), 4)) return failed(id, *err, t0);
  if (auto err = exact_count("U2,6p", builtin_matroid("U2,6p"), 7)) return failed(id, *err, t0);
  if (auto err = exact_count("U2,5pp", builtin_matroid("U2,5pp"), 10)) return failed(id, *err, t0);
  for (const Multigraph& g : catalog(uniform(3, 5))) {
    int loops = 0;
    for (const Edge& e : g.edges) loops += e.kind == EdgeKind::Loop;
    if (loops > 1) return failed(id, "U3,5 representation with two loops", t0);
    rep.witnesses.push_back(graph_payload("U3,5 representation", g));
  }
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

VerificationReport check_cobicircular_equivalence(bool corrupt) {
  auto t0 = Clock::now();
  const std::string id = "check_cobicircular_equivalence";
  VerificationReport rep{id, "pass", {}, std::nullopt, 0};

  CorpusParams p;
  p.min_vertices = 4;
  p.max_vertices = 5;
  p.max_edges = 9;
  p.min_degree = 3;
  p.require_2connected = true;
  Multigraph host = build_named(corrupt ? "K4+" : "K4++");
  Multigraph w4 = build_named("W4");
  Multigraph k4l = build_named("K4l");
  Multigraph t223 = build_named("T_2_2_3");
  int tested = 0;
  for (const Multigraph& g : generate_corpus(p)) {
    if (!is_vertex_3connected(g)) continue;
    bool p1 = is_cobicircular(bicircular_matroid(g));
    bool p2 = !graph_minor_contains(g, w4) && !graph_minor_contains(g, k4l) &&
              !graph_minor_contains(g, t223);
    bool p3 = graph_minor_contains(host, g);
    if (p1 != p2 || p2 != p3)
      return failed(id,
                    graph_payload("predicates disagree: cobicircular=" +
                                      std::to_string(p1) + " no-forbidden-minor=" +
                                      std::to_string(p2) + " host-minor=" +
                                      std::to_string(p3),
                                  g),
                    t0);
    ++tested;
  }
  rep.witnesses.push_back("# equivalence verified on " + std::to_string(tested) +
                          " vertex-3-connected graphs with at most 9 edges");
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

VerificationReport check_extension_minors(bool corrupt) {
  auto t0 = Clock::now();
  const std::string id = "check_extension_minors";
  if (!figure_graphs_available())
    return skipped(id, "figure graph data unavailable", t0);
  VerificationReport rep{id, "pass", {}, std::nullopt, 0};
  std::vector<Multigraph> targets = {build_named("T_2_2_3"), build_named("7K2"),
                                     build_named("6K2l"), build_named("5K2o")};
  std::vector<Multigraph> bases;
  for (const char* name : {"K4++", "N8", "O8", "Z8", "Z8d", "F10"})
    bases.push_back(build_named(name));
  if (corrupt) bases.push_back(delete_edge(build_named("N8"), 0));
  int tested = 0;
  for (const Multigraph& s : bases) {
    std::vector<Multigraph> extensions;
    int fresh = 0;
    for (int l : s.labels) fresh = std::max(fresh, l + 1);
    for (int u = 0; u < s.vertex_count; ++u)
      for (int v = u + 1; v < s.vertex_count; ++v) {
        Multigraph g = s;
        g.edges.push_back(Edge::link(u, v));
        g.labels.push_back(fresh);
        extensions.push_back(g);
      }
    for (int v = 0; v < s.vertex_count; ++v) {
      bool has_loop = false;
      for (const Edge& e : s.edges)
        if (e.kind == EdgeKind::Loop && e.u == v) has_loop = true;
      if (has_loop) continue;
      Multigraph g = s;
      g.edges.push_back(Edge::loop(v));
      g.labels.push_back(fresh);
      extensions.push_back(g);
    }
    for (const Multigraph& g : extensions) {
      if (!wagner_3connected(g)) continue;
      bool found = false;
      for (const Multigraph& t : targets)
        if (graph_minor_contains(g, t)) { found = true; break; }
      if (!found)
        return failed(id, graph_payload("extension with none of the four minors", g), t0);
      ++tested;
    }
  }
  rep.witnesses.push_back("# " + std::to_string(tested) +
                          " single-edge extensions each contain a required minor");
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

VerificationReport check_main_characterization(int max_edges, int jobs, bool corrupt) {
  auto t0 = Clock::now();
  const std::string id = "check_main_characterization";
  if (max_edges > 9)
    throw std::invalid_argument("check_main_characterization: max_edges over 9");
  if (!figure_graphs_available())
    return skipped(id, "figure graph data unavailable", t0);
  VerificationReport rep{id, "pass", {}, std::nullopt, 0};

  // catalog graphs of the nine excluded minors, for predicate (2)
  std::vector<Multigraph> forbidden;
  {
    std::set<std::string> seen;
    for (const std::string& name : excluded_minor_names())
      for (const Multigraph& g : enumerate_representations(builtin_matroid(name)))
        if (seen.insert(canonical_form(g)).second) forbidden.push_back(g);
  }

  // closure hosts for predicate (3): the swirl of matching size covers all
  // smaller swirls, plus the six sporadic graphs
  std::vector<Multigraph> hosts;
  if (!corrupt) hosts.push_back(build_named("2C" + std::to_string(max_edges)));
  for (const char* name : {"K4++", "N8", "O8", "Z8", "Z8d", "F10"})
    hosts.push_back(build_named(name));
  MinorClosure closure = build_closure(hosts, max_edges);

  std::vector<Multigraph> corpus = three_connected_corpus(max_edges);
  std::mutex mu;
  std::vector<std::string> failures;
  long long tested = 0;
  jobs = std::max(1, jobs);
  auto worker = [&](int shard) {
    for (size_t i = shard; i < corpus.size(); i += jobs) {
      const Multigraph& g = corpus[i];
      Matroid b = bicircular_matroid(g);
      bool p1 = is_cobicircular(b);
      bool p2 = true;
      for (const Multigraph& h : forbidden)
        if (graph_minor_contains(g, h)) { p2 = false; break; }
      bool p3 = closure.contains(b);
      std::lock_guard<std::mutex> lock(mu);
      ++tested;
      if (p1 != p2 || p2 != p3)
        failures.push_back(graph_payload(
            "predicates disagree: cobicircular=" + std::to_string(p1) +
                " no-forbidden-minor=" + std::to_string(p2) +
                " host-minor=" + std::to_string(p3),
            g));
    }
  };
  std::vector<std::thread> pool;
  for (int s = 0; s < jobs; ++s) pool.emplace_back(worker, s);
  for (auto& th : pool) th.join();
  if (!failures.empty()) {
    std::sort(failures.begin(), failures.end());
    return failed(id, failures.front(), t0);
  }
  rep.witnesses.push_back("# equivalence verified on " + std::to_string(tested) +
                          " graphs with 3-connected bicircular matroid and at most " +
                          std::to_string(max_edges) + " edges");
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

std::vector<std::string> check_ids() {
  return {"check_self_dualities",    "check_free_swirls",
          "check_excluded_minors",   "check_representation_catalogs",
          "check_cobicircular_equivalence", "check_extension_minors",
          "check_main_characterization"};
}

VerificationReport run_check(const std::string& check_id, int max_edges, int jobs) {
  if (check_id == "check_self_dualities") return check_self_dualities();
  if (check_id == "check_free_swirls") return check_free_swirls();
  if (check_id == "check_excluded_minors") return check_excluded_minors();
  if (check_id == "check_representation_catalogs") return check_representation_catalogs();
  if (check_id == "check_cobicircular_equivalence") return check_cobicircular_equivalence();
  if (check_id == "check_extension_minors") return check_extension_minors();
  if (check_id == "check_main_characterization")
    return check_main_characterization(max_edges, jobs);
  throw std::invalid_argument("unknown check id '" + check_id + "'");
}

}  // namespace bicirc
