#include "tfc/embedding.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace tfc {

const Walk& EmbeddedGraph::walk(int index) const {
  const auto f = static_cast<int>(faces.size());
  return index < f ? faces[static_cast<std::size_t>(index)]
                   : cuffs[static_cast<std::size_t>(index - f)];
}

namespace {

std::string walk_label(const EmbeddedGraph& g, int index) {
  const auto f = static_cast<int>(g.faces.size());
  return index < f ? "face " + std::to_string(index) : "cuff " + std::to_string(index - f);
}

int euler_target(Surface s) { return s == Surface::Disk ? 1 : 0; }

}  // namespace

std::vector<Violation> validate(const EmbeddedGraph& g) {
  std::vector<Violation> out;
  const int n = g.vertex_count;
  if (n <= 0) {
    out.push_back({"graph has no vertices", "vertices"});
    return out;
  }
  const std::size_t expected_cuffs = g.surface == Surface::Disk ? 1 : 2;
  if (g.cuffs.size() != expected_cuffs) {
    out.push_back({"expected " + std::to_string(expected_cuffs) + " cuff walk(s), found " +
                       std::to_string(g.cuffs.size()),
                   "cuffs"});
  }

  std::set<Edge> edge_set;
  bool edges_ok = true;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    auto [u, v] = g.edges[i];
    const std::string locus = "edge " + std::to_string(i);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      out.push_back({"vertex out of range", locus});
      edges_ok = false;
      continue;
    }
    if (u == v) {
      out.push_back({"loop", locus});
      edges_ok = false;
      continue;
    }
    if (!edge_set.insert(make_edge(u, v)).second) {
      out.push_back({"parallel edge", locus});
      edges_ok = false;
    }
  }

  std::map<std::pair<int, int>, int> directed;
  bool walks_ok = true;
  for (int w = 0; w < g.walk_count(); ++w) {
    const Walk& walk = g.walk(w);
    if (walk.size() < 2) {
      out.push_back({"walk shorter than 2", walk_label(g, w)});
      walks_ok = false;
      continue;
    }
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const int u = walk[i];
      const int v = walk[(i + 1) % walk.size()];
      if (u < 0 || v < 0 || u >= n || v >= n) {
        out.push_back({"vertex out of range", walk_label(g, w)});
        walks_ok = false;
        continue;
      }
      if (!edge_set.contains(make_edge(u, v))) {
        out.push_back({"walk step " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge",
                       walk_label(g, w)});
        walks_ok = false;
        continue;
      }
      ++directed[{u, v}];
    }
  }

  for (const Edge& e : edge_set) {
    const int fwd = directed[{e.first, e.second}];
    const int bwd = directed[{e.second, e.first}];
    const std::string locus = "edge " + std::to_string(e.first) + "-" + std::to_string(e.second);
    if (fwd > 1 || bwd > 1) {
      out.push_back({"edge traversed twice in same direction", locus});
      walks_ok = false;
    } else if (fwd + bwd != 2) {
      out.push_back({"edge occurs " + std::to_string(fwd + bwd) + " times across walks, expected 2",
                     locus});
      walks_ok = false;
    }
  }

  for (std::size_t c = 0; c < g.cuffs.size(); ++c) {
    const Walk& cuff = g.cuffs[c];
    std::set<int> seen(cuff.begin(), cuff.end());
    if (cuff.size() < 3 || seen.size() != cuff.size()) {
      out.push_back({"cuff walk is not a simple cycle", "cuff " + std::to_string(c)});
    }
  }

  if (edges_ok && walks_ok) {
    const int euler = n - static_cast<int>(edge_set.size()) + static_cast<int>(g.faces.size());
    if (euler != euler_target(g.surface)) {
      out.push_back({"Euler relation fails: V - E + F = " + std::to_string(euler) + ", expected " +
                         std::to_string(euler_target(g.surface)),
                     "graph"});
    }
  }

  if (edges_ok) {
    const Graph plain = Graph::from_edges(n, {edge_set.begin(), edge_set.end()});
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::deque<int> queue{0};
    seen[0] = true;
    int reached = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : plain.adjacency[static_cast<std::size_t>(u)]) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          ++reached;
          queue.push_back(v);
        }
      }
    }
    if (reached != n) out.push_back({"graph is not connected", "graph"});
  }
  return out;
}

bool is_valid(const EmbeddedGraph& g) { return validate(g).empty(); }

void require_valid(const EmbeddedGraph& g, std::string_view context) {
  const auto violations = validate(g);
  if (!violations.empty()) {
    throw PreconditionError(std::string(context) + ": invalid embedded graph: " +
                            violations.front().what + " (" + violations.front().locus + ")");
  }
}

bool is_quadrangulation(const EmbeddedGraph& g) {
  return std::all_of(g.faces.begin(), g.faces.end(), [](const Walk& f) { return f.size() == 4; });
}

Walk canonical_walk(const Walk& w) {
  if (w.empty()) return w;
  const std::size_t len = w.size();
  std::size_t best = 0;
  for (std::size_t i = 1; i < len; ++i) {
    if (w[i] < w[best]) {
      best = i;
    } else if (w[i] == w[best]) {
      // Compare the full rotations so the choice is well defined for walks
      // that revisit their smallest vertex.
      for (std::size_t j = 1; j < len; ++j) {
        const int a = w[(i + j) % len];
        const int b = w[(best + j) % len];
        if (a != b) {
          if (a < b) best = i;
          break;
        }
      }
    }
  }
  Walk out(len);
  for (std::size_t j = 0; j < len; ++j) out[j] = w[(best + j) % len];
  return out;
}

Walk reversed(const Walk& w) { return Walk(w.rbegin(), w.rend()); }

Walk canonical_cycle(const Walk& w) {
  Walk a = canonical_walk(w);
  Walk b = canonical_walk(reversed(w));
  return std::min(a, b);
}

bool same_cycle(const Walk& a, const Walk& b) {
  return a.size() == b.size() && canonical_cycle(a) == canonical_cycle(b);
}

std::vector<Edge> walk_edges(const Walk& w) {
  std::vector<Edge> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(make_edge(w[i], w[(i + 1) % w.size()]));
  return out;
}

EmbeddedGraph canonicalize(const EmbeddedGraph& g) {
  EmbeddedGraph out;
  out.surface = g.surface;
  out.vertex_count = g.vertex_count;
  out.edges.reserve(g.edges.size());
  for (auto [u, v] : g.edges) out.edges.push_back(make_edge(u, v));
  std::sort(out.edges.begin(), out.edges.end());
  for (const Walk& f : g.faces) out.faces.push_back(canonical_walk(f));
  std::sort(out.faces.begin(), out.faces.end());
  for (const Walk& c : g.cuffs) out.cuffs.push_back(canonical_walk(c));
  return out;
}

bool operator==(const EmbeddedGraph& a, const EmbeddedGraph& b) {
  const EmbeddedGraph ca = canonicalize(a);
  const EmbeddedGraph cb = canonicalize(b);
  return ca.surface == cb.surface && ca.vertex_count == cb.vertex_count && ca.edges == cb.edges &&
         ca.faces == cb.faces && ca.cuffs == cb.cuffs;
}

EmbeddedGraph from_walks(Surface surface, int vertex_count, std::vector<Walk> faces,
                         std::vector<Walk> cuffs) {
  std::set<Edge> edges;
  for (const auto* list : {&faces, &cuffs}) {
    for (const Walk& w : *list) {
      for (const Edge& e : walk_edges(w)) edges.insert(e);
    }
  }
  EmbeddedGraph g;
  g.surface = surface;
  g.vertex_count = vertex_count;
  g.edges.assign(edges.begin(), edges.end());
  g.faces = std::move(faces);
  g.cuffs = std::move(cuffs);
  return g;
}

Relabeled compact(const EmbeddedGraph& g) {
  std::vector<bool> used(static_cast<std::size_t>(g.vertex_count), g.edges.empty());
  for (auto [u, v] : g.edges) {
    used[static_cast<std::size_t>(u)] = true;
    used[static_cast<std::size_t>(v)] = true;
  }
  Relabeled r;
  r.old_to_new.assign(static_cast<std::size_t>(g.vertex_count), -1);
  for (int v = 0; v < g.vertex_count; ++v) {
    if (used[static_cast<std::size_t>(v)]) {
      r.old_to_new[static_cast<std::size_t>(v)] = static_cast<int>(r.new_to_old.size());
      r.new_to_old.push_back(v);
    }
  }
  auto map_walk = [&](const Walk& w) {
    Walk out;
    out.reserve(w.size());
    for (int v : w) out.push_back(r.old_to_new[static_cast<std::size_t>(v)]);
    return out;
  };
  r.graph.surface = g.surface;
  r.graph.vertex_count = static_cast<int>(r.new_to_old.size());
  for (auto [u, v] : g.edges) {
    r.graph.edges.push_back(make_edge(r.old_to_new[static_cast<std::size_t>(u)],
                                      r.old_to_new[static_cast<std::size_t>(v)]));
  }
  std::sort(r.graph.edges.begin(), r.graph.edges.end());
  for (const Walk& f : g.faces) r.graph.faces.push_back(map_walk(f));
  for (const Walk& c : g.cuffs) r.graph.cuffs.push_back(map_walk(c));
  return r;
}

void orient_consistently(std::vector<Walk>& walks, int anchor) {
  // Walks sharing an edge must traverse it in opposite directions.
  std::map<Edge, std::vector<std::pair<int, bool>>> uses;  // walk, traversed low->high
  for (int w = 0; w < static_cast<int>(walks.size()); ++w) {
    const Walk& walk = walks[static_cast<std::size_t>(w)];
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const int u = walk[i];
      const int v = walk[(i + 1) % walk.size()];
      uses[make_edge(u, v)].push_back({w, u < v});
    }
  }
  std::vector<int> flip(walks.size(), -1);
  flip[static_cast<std::size_t>(anchor)] = 0;
  std::deque<int> queue{anchor};
  std::vector<std::vector<std::pair<int, bool>>> constraints(walks.size());
  for (const auto& [edge, list] : uses) {
    if (list.size() != 2) throw Error("orient_consistently: edge not shared by exactly two walk slots");
    const auto [a, da] = list[0];
    const auto [b, db] = list[1];
    // flip[a] ^ flip[b] must make the directions differ.
    const bool must_differ_flip = (da == db);
    constraints[static_cast<std::size_t>(a)].push_back({b, must_differ_flip});
    constraints[static_cast<std::size_t>(b)].push_back({a, must_differ_flip});
  }
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    for (auto [b, differ] : constraints[static_cast<std::size_t>(a)]) {
      const int want = flip[static_cast<std::size_t>(a)] ^ (differ ? 1 : 0);
      if (a == b) {
        if (differ) throw Error("orient_consistently: walk conflicts with itself");
        continue;
      }
      int& fb = flip[static_cast<std::size_t>(b)];
      if (fb == -1) {
        fb = want;
        queue.push_back(b);
      } else if (fb != want) {
        throw Error("orient_consistently: no consistent orientation");
      }
    }
  }
  for (std::size_t w = 0; w < walks.size(); ++w) {
    if (flip[w] == 1) walks[w] = reversed(walks[w]);
  }
}

// ---------------------------------------------------------------------------
// EMG text format

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, int line) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(line, "expected a nonnegative integer, got '" + tok + "'");
  }
  try {
    return std::stoi(tok);
  } catch (const std::exception&) {
    throw ParseError(line, "integer out of range: '" + tok + "'");
  }
}

}  // namespace

EmbeddedGraph parse_emg(std::string_view text) {
  if (text.empty() || text.back() != '\n') throw ParseError(1, "missing trailing newline");
  EmbeddedGraph g;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int stage = 0;  // 0: header, 1: vertices, 2: body
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].starts_with('#')) continue;
    const std::string& kw = tokens[0];
    if (stage == 0) {
      if (kw != "emg" || tokens.size() != 3) throw ParseError(lineno, "expected 'emg <version> <surface>'");
      if (tokens[1] != "1") throw ParseError(lineno, "unknown format version " + tokens[1]);
      if (tokens[2] == "disk") {
        g.surface = Surface::Disk;
      } else if (tokens[2] == "cylinder") {
        g.surface = Surface::Cylinder;
      } else {
        throw ParseError(lineno, "unknown surface '" + tokens[2] + "'");
      }
      stage = 1;
    } else if (stage == 1) {
      if (kw != "vertices" || tokens.size() != 2) throw ParseError(lineno, "expected 'vertices <n>'");
      g.vertex_count = parse_int(tokens[1], lineno);
      stage = 2;
    } else {
      std::vector<int> ids;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const int v = parse_int(tokens[i], lineno);
        if (v >= g.vertex_count) throw ParseError(lineno, "vertex out of range: " + tokens[i]);
        ids.push_back(v);
      }
      if (kw == "edge") {
        if (ids.size() != 2) throw ParseError(lineno, "edge needs exactly two vertices");
        g.edges.emplace_back(ids[0], ids[1]);
      } else if (kw == "face") {
        if (ids.size() < 2) throw ParseError(lineno, "face needs at least two vertices");
        g.faces.push_back(std::move(ids));
      } else if (kw == "cuff") {
        if (ids.size() < 2) throw ParseError(lineno, "cuff needs at least two vertices");
        g.cuffs.push_back(std::move(ids));
      } else {
        throw ParseError(lineno, "unknown record '" + kw + "'");
      }
    }
  }
  if (stage < 2) throw ParseError(lineno, "truncated header");
  return g;
}

std::string serialize_emg(const EmbeddedGraph& g) {
  const EmbeddedGraph c = canonicalize(g);
  std::ostringstream out;
  out << "emg 1 " << (c.surface == Surface::Disk ? "disk" : "cylinder") << '\n';
  out << "vertices " << c.vertex_count << '\n';
  for (auto [u, v] : c.edges) out << "edge " << u << ' ' << v << '\n';
  auto put = [&](const char* kw, const Walk& w) {
    out << kw;
    for (int v : w) out << ' ' << v;
    out << '\n';
  };
  for (const Walk& f : c.faces) put("face", f);
  for (const Walk& cf : c.cuffs) put("cuff", cf);
  return out.str();
}

std::vector<Corner> corners_around(const EmbeddedGraph& g, int v) {
  std::map<int, Corner> by_prev;
  for (int w = 0; w < g.walk_count(); ++w) {
    const Walk& walk = g.walk(w);
    const auto len = walk.size();
    for (std::size_t i = 0; i < len; ++i) {
      if (walk[i] != v) continue;
      Corner c{w, static_cast<int>(i), walk[(i + len - 1) % len], walk[(i + 1) % len]};
      by_prev[c.prev] = c;
    }
  }
  std::vector<Corner> out;
  if (by_prev.empty()) return out;
  Corner cur = by_prev.begin()->second;
  for (std::size_t step = 0; step < by_prev.size(); ++step) {
    if (step > 0 && cur.prev == out.front().prev) throw Error("corners_around: vertex is not a manifold point");
    out.push_back(cur);
    auto it = by_prev.find(cur.next);
    if (it == by_prev.end()) throw Error("corners_around: rotation at vertex is not closed");
    cur = it->second;
  }
  if (cur.prev != out.front().prev) throw Error("corners_around: vertex is not a manifold point");
  return out;
}

// ---------------------------------------------------------------------------

Graph Graph::from_edges(int vertex_count, const std::vector<Edge>& edges) {
  Graph g;
  g.vertex_count = vertex_count;
  g.adjacency.assign(static_cast<std::size_t>(vertex_count), {});
  for (auto [u, v] : edges) {
    g.adjacency[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : g.adjacency) std::sort(list.begin(), list.end());
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < vertex_count; ++u) {
    for (int v : adjacency[static_cast<std::size_t>(u)]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::has_edge(int u, int v) const {
  const auto& list = adjacency[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

Graph Graph::without_edge(Edge e) const {
  Graph g = *this;
  auto erase = [&](int a, int b) {
    auto& list = g.adjacency[static_cast<std::size_t>(a)];
    list.erase(std::remove(list.begin(), list.end(), b), list.end());
  };
  erase(e.first, e.second);
  erase(e.second, e.first);
  return g;
}

Graph underlying_graph(const EmbeddedGraph& g) { return Graph::from_edges(g.vertex_count, g.edges); }

bool is_proper(const Graph& g, const Coloring& c) {
  for (int u = 0; u < g.vertex_count; ++u) {
    if (!c.assigned(u)) continue;
    for (int v : g.adjacency[static_cast<std::size_t>(u)]) {
      if (c.assigned(v) && c[v] == c[u]) return false;
    }
  }
  return true;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.vertex_count), -1);
  for (int s = 0; s < g.vertex_count; ++s) {
    if (side[static_cast<std::size_t>(s)] != -1) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : g.adjacency[static_cast<std::size_t>(u)]) {
        auto& sv = side[static_cast<std::size_t>(v)];
        if (sv == -1) {
          sv = 1 - side[static_cast<std::size_t>(u)];
          queue.push_back(v);
        } else if (sv == side[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace tfc
