#include "bicirc/named_graphs.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#ifndef BICIRC_SOURCE_DATA_DIR
#define BICIRC_SOURCE_DATA_DIR ""
#endif

namespace bicirc {

namespace {

Multigraph cycle(int n) {
  if (n < 1) throw std::invalid_argument("cycle needs at least 1 vertex");
  std::vector<Edge> es;
  if (n == 1) {
    es.push_back(Edge::loop(0));
  } else {
    for (int i = 0; i < n; ++i) es.push_back(Edge::link(i, (i + 1) % n));
  }
  return Multigraph(n, std::move(es));
}

Multigraph doubled_cycle(int n) {
  if (n < 1) throw std::invalid_argument("doubled cycle needs at least 1 vertex");
  std::vector<Edge> es;
  if (n == 1) {
    es.push_back(Edge::loop(0));
    es.push_back(Edge::loop(0));
  } else {
    for (int i = 0; i < n; ++i) {
      es.push_back(Edge::link(i, (i + 1) % n));
      es.push_back(Edge::link(i, (i + 1) % n));
    }
  }
  return Multigraph(n, std::move(es));
}

Multigraph bundle(int m) {
  std::vector<Edge> es;
  for (int i = 0; i < m; ++i) es.push_back(Edge::link(0, 1));
  return Multigraph(2, std::move(es));
}

Multigraph triangle_mult(int a, int b, int c) {
  std::vector<Edge> es;
  for (int i = 0; i < a; ++i) es.push_back(Edge::link(0, 1));
  for (int i = 0; i < b; ++i) es.push_back(Edge::link(1, 2));
  for (int i = 0; i < c; ++i) es.push_back(Edge::link(2, 0));
  return Multigraph(3, std::move(es));
}

Multigraph wheel(int n) {
  if (n < 3) throw std::invalid_argument("wheel needs rim length >= 3");
  std::vector<Edge> es;
  for (int i = 1; i <= n; ++i) es.push_back(Edge::link(0, i));
  for (int i = 1; i <= n; ++i) es.push_back(Edge::link(i, i % n + 1));
  return Multigraph(n + 1, std::move(es));
}

Multigraph k4() {
  return Multigraph(4, {Edge::link(0, 1), Edge::link(0, 2), Edge::link(0, 3),
                        Edge::link(1, 2), Edge::link(1, 3), Edge::link(2, 3)});
}

Multigraph k4_plus() {
  return Multigraph(4, {Edge::link(0, 1), Edge::link(0, 1), Edge::link(0, 2),
                        Edge::link(0, 3), Edge::link(1, 2), Edge::link(1, 3),
                        Edge::link(2, 3)});
}

Multigraph k4_plus_plus() {
  return Multigraph(4, {Edge::link(0, 1), Edge::link(0, 1), Edge::link(2, 3),
                        Edge::link(2, 3), Edge::link(0, 2), Edge::link(1, 3),
                        Edge::link(0, 3), Edge::link(1, 2)});
}

Multigraph c4_plus_plus() {
  return Multigraph(4, {Edge::link(0, 1), Edge::link(0, 1), Edge::link(1, 2),
                        Edge::link(2, 3), Edge::link(2, 3), Edge::link(3, 0)});
}

Multigraph k23() {
  return Multigraph(5, {Edge::link(0, 2), Edge::link(0, 3), Edge::link(0, 4),
                        Edge::link(1, 2), Edge::link(1, 3), Edge::link(1, 4)});
}

const std::map<std::string, Multigraph>* figure_graphs() {
  static std::once_flag once;
  static std::map<std::string, Multigraph> graphs;
  static bool ok = false;
  std::call_once(once, [] {
    auto path = figure_data_path();
    if (!path) return;
    std::ifstream f(*path);
    if (!f) return;
    std::ostringstream ss;
    ss << f.rdbuf();
    graphs = parse_bgr_collection(ss.str());
    ok = true;
  });
  return ok ? &graphs : nullptr;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// Base-name expansion without suffix handling; nullopt if unknown.
std::optional<Multigraph> build_base(const std::string& key) {
  if (key == "K4") return k4();
  if (key == "K4+") return k4_plus();
  if (key == "K4++") return k4_plus_plus();
  if (key == "C4++") return c4_plus_plus();
  if (key == "K23") return k23();
  if (key == "N8" || key == "O8" || key == "Z8" || key == "Z8d" ||
      key == "F10" || key == "D4ll") {
    const auto* figs = figure_graphs();
    if (!figs) throw std::runtime_error("figure graph data file not found (set BICIRC_DATA_DIR)");
    auto it = figs->find(key);
    if (it == figs->end()) throw std::runtime_error("figure graph '" + key + "' missing from data file");
    return it->second;
  }
  if (key.size() > 1 && key[0] == 'C' && all_digits(key.substr(1)))
    return cycle(std::stoi(key.substr(1)));
  if (key.size() > 2 && key[0] == '2' && key[1] == 'C' && all_digits(key.substr(2)))
    return doubled_cycle(std::stoi(key.substr(2)));
  if (key.size() > 2 && key.substr(key.size() - 2) == "K2" &&
      all_digits(key.substr(0, key.size() - 2)))
    return bundle(std::stoi(key.substr(0, key.size() - 2)));
  if (key.size() > 1 && key[0] == 'W' && all_digits(key.substr(1)))
    return wheel(std::stoi(key.substr(1)));
  if (key.rfind("T_", 0) == 0) {
    std::string rest = key.substr(2);
    size_t p1 = rest.find('_');
    size_t p2 = p1 == std::string::npos ? std::string::npos : rest.find('_', p1 + 1);
    if (p2 != std::string::npos) {
      std::string a = rest.substr(0, p1);
      std::string b = rest.substr(p1 + 1, p2 - p1 - 1);
      std::string c = rest.substr(p2 + 1);
      if (all_digits(a) && all_digits(b) && all_digits(c))
        return triangle_mult(std::stoi(a), std::stoi(b), std::stoi(c));
    }
  }
  return std::nullopt;
}

Multigraph add_loop_at_zero(Multigraph g) {
  if (g.vertex_count < 1) throw std::invalid_argument("^l needs a vertex");
  g.edges.push_back(Edge::loop(0));
  g.labels.push_back(g.edge_count() - 1);
  return g;
}

Multigraph add_loop_everywhere(Multigraph g) {
  int n = g.vertex_count;
  for (int v = 0; v < n; ++v) {
    g.edges.push_back(Edge::loop(v));
    g.labels.push_back(g.edge_count() - 1);
  }
  return g;
}

std::optional<Multigraph> try_build(const std::string& key) {
  if (auto g = build_base(key)) return g;
  // Suffixes ^l / ^o, caret optional.  Exact base names win, so D4ll is
  // never parsed as D4l^l.
  auto strip = [&](const std::string& suf) -> std::optional<std::string> {
    if (key.size() > suf.size() &&
        key.compare(key.size() - suf.size(), suf.size(), suf) == 0)
      return key.substr(0, key.size() - suf.size());
    return std::nullopt;
  };
  for (const char* suf : {"^l", "l"})
    if (auto base = strip(suf))
      if (auto g = build_base(*base)) return add_loop_at_zero(std::move(*g));
  for (const char* suf : {"^o", "o"})
    if (auto base = strip(suf))
      if (auto g = build_base(*base)) return add_loop_everywhere(std::move(*g));
  return std::nullopt;
}

}  // namespace

Multigraph build_named(const std::string& key) {
  if (auto g = try_build(key)) {
    g->validate();
    return *g;
  }
  throw std::invalid_argument("unknown named graph '" + key + "'");
}

bool is_named_graph(const std::string& key) {
  try {
    return try_build(key).has_value();
  } catch (const std::runtime_error&) {
    return false;  // figure data file unavailable
  }
}

std::vector<std::string> named_graph_keys() {
  std::vector<std::string> keys = {"K4", "K4+", "K4++", "C4++", "K23"};
  if (const auto* figs = figure_graphs())
    for (const auto& [name, g] : *figs) keys.push_back(name);
  return keys;
}

bool figure_graphs_available() { return figure_graphs() != nullptr; }

std::optional<std::string> figure_data_path() {
  namespace fs = std::filesystem;
  std::vector<std::string> candidates;
  if (const char* dir = std::getenv("BICIRC_DATA_DIR"))
    candidates.push_back(std::string(dir) + "/figure_graphs.bgr");
  candidates.push_back("data/figure_graphs.bgr");
  if (std::string(BICIRC_SOURCE_DATA_DIR).size() > 0)
    candidates.push_back(std::string(BICIRC_SOURCE_DATA_DIR) + "/figure_graphs.bgr");
  for (const auto& c : candidates) {
    std::error_code ec;
    if (fs::is_regular_file(c, ec)) return c;
  }
  return std::nullopt;
}

std::map<std::string, Multigraph> parse_bgr_collection(const std::string& text) {
  std::map<std::string, Multigraph> out;
  std::istringstream is(text);
  std::string line;
  std::string name;
  std::ostringstream section;
  auto flush = [&] {
    if (name.empty()) return;
    if (out.count(name))
      throw std::invalid_argument("duplicate graph section '" + name + "'");
    out.emplace(name, parse_bgr(section.str()));
    section.str("");
    name.clear();
  };
  while (std::getline(is, line)) {
    std::string stripped = line;
    size_t h = stripped.find('#');
    if (h != std::string::npos) stripped.resize(h);
    std::istringstream ls(stripped);
    std::string tok;
    if (ls >> tok && tok == "graph") {
      flush();
      if (!(ls >> name)) throw std::invalid_argument("graph section without a name");
    } else if (!tok.empty() && name.empty()) {
      throw std::invalid_argument("content before first graph section");
    } else {
      section << line << "\n";
    }
  }
  flush();
  return out;
}

Multigraph t222_prime() {
  return Multigraph(4, {Edge::link(0, 1), Edge::link(0, 1), Edge::link(1, 2),
                        Edge::link(1, 2), Edge::link(2, 0), Edge::link(2, 3),
                        Edge::link(3, 0)});
}

}  // namespace bicirc
