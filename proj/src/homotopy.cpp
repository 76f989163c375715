#include "tfc/homotopy.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

namespace tfc {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

struct Step {
  int walk;
  int from;
  int to;
};

// Both traversals of every edge.
std::map<Edge, std::vector<Step>> edge_uses(const EmbeddedGraph& g) {
  std::map<Edge, std::vector<Step>> uses;
  for (int w = 0; w < g.walk_count(); ++w) {
    const Walk& walk = g.walk(w);
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const int u = walk[i];
      const int v = walk[(i + 1) % walk.size()];
      uses[make_edge(u, v)].push_back({w, u, v});
    }
  }
  return uses;
}

void require_cylinder(const EmbeddedGraph& g, const char* op) {
  if (g.surface != Surface::Cylinder) {
    throw PreconditionError(std::string(op) + ": disk has no non-contractible cycles");
  }
}

}  // namespace

Cocycle::Cocycle(std::vector<Edge> edges, std::vector<int> values)
    : edges_(std::move(edges)), values_(std::move(values)) {}

int Cocycle::crossing(int u, int v) const {
  const Edge e = make_edge(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) throw Error("cocycle: step is not an edge");
  const int value = values_[static_cast<std::size_t>(it - edges_.begin())];
  return u < v ? value : -value;
}

int Cocycle::sum(const Walk& w) const {
  int total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) total += crossing(w[i], w[(i + 1) % w.size()]);
  return total;
}

Cocycle build_cocycle(const EmbeddedGraph& g) { return build_cocycle(g, {}); }

Cocycle build_cocycle(const EmbeddedGraph& g, const std::vector<Edge>& avoid) {
  require_cylinder(g, "build_cocycle");
  const auto uses = edge_uses(g);
  const int nodes = g.walk_count();
  const int source = static_cast<int>(g.faces.size());
  const int target = source + 1;
  const std::set<Edge> avoided(avoid.begin(), avoid.end());

  struct Parent {
    int node = -1;
    Step step{};
  };
  auto search = [&](bool skip_avoided) {
    std::vector<Parent> parent(static_cast<std::size_t>(nodes));
    std::vector<bool> seen(static_cast<std::size_t>(nodes), false);
    seen[static_cast<std::size_t>(source)] = true;
    std::deque<int> queue{source};
    // Dual adjacency in a deterministic order (by edge).
    std::vector<std::vector<std::pair<int, Step>>> dual(static_cast<std::size_t>(nodes));
    for (const auto& [edge, list] : uses) {
      if (list.size() != 2 || (skip_avoided && avoided.contains(edge))) continue;
      dual[static_cast<std::size_t>(list[0].walk)].push_back({list[1].walk, list[0]});
      dual[static_cast<std::size_t>(list[1].walk)].push_back({list[0].walk, list[1]});
    }
    while (!queue.empty()) {
      const int a = queue.front();
      queue.pop_front();
      for (const auto& [b, step] : dual[static_cast<std::size_t>(a)]) {
        if (seen[static_cast<std::size_t>(b)]) continue;
        seen[static_cast<std::size_t>(b)] = true;
        parent[static_cast<std::size_t>(b)] = {a, step};
        queue.push_back(b);
      }
    }
    return std::make_pair(static_cast<bool>(seen[static_cast<std::size_t>(target)]), parent);
  };

  auto [found, parent] = search(true);
  if (!found) std::tie(found, parent) = search(false);
  if (!found) throw Error("build_cocycle: cuff faces are not connected in the dual graph");

  std::vector<Edge> edges;
  edges.reserve(uses.size());
  for (const auto& entry : uses) edges.push_back(entry.first);
  std::vector<int> values(edges.size(), 0);
  for (int node = target; node != source; node = parent[static_cast<std::size_t>(node)].node) {
    // The step is the traversal of the crossed edge inside the walk we leave.
    const Step& step = parent[static_cast<std::size_t>(node)].step;
    const Edge e = make_edge(step.from, step.to);
    const auto idx = static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
    values[idx] += step.from < step.to ? 1 : -1;
  }
  return Cocycle(std::move(edges), std::move(values));
}

bool is_contractible(const Cocycle& cocycle, const Walk& cycle) { return cocycle.sum(cycle) == 0; }

std::vector<int> bfs_distances(const Graph& g, const std::vector<int>& sources) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count), kUnreached);
  std::deque<int> queue;
  for (int s : sources) {
    if (dist[static_cast<std::size_t>(s)] != 0) {
      dist[static_cast<std::size_t>(s)] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : g.adjacency[static_cast<std::size_t>(u)]) {
      if (dist[static_cast<std::size_t>(v)] == kUnreached) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

int noncontractible_girth(const EmbeddedGraph& g, const Cocycle& cocycle, int max_length) {
  const Graph plain = underlying_graph(g);
  const int n = g.vertex_count;
  const int span = 2 * max_length + 1;
  // crossing values per adjacency slot
  std::vector<std::vector<int>> cross(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    for (int v : plain.adjacency[static_cast<std::size_t>(u)]) cross[static_cast<std::size_t>(u)].push_back(cocycle.crossing(u, v));
  }
  int best = 0;
  std::vector<int> dist(static_cast<std::size_t>(n * span));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    auto idx = [&](int v, int w) { return static_cast<std::size_t>(v * span + (w + max_length)); };
    dist[idx(s, 0)] = 0;
    std::deque<std::pair<int, int>> queue{{s, 0}};
    const int limit = best == 0 ? max_length : best - 1;
    int found = 0;
    while (!queue.empty() && found == 0) {
      auto [u, w] = queue.front();
      queue.pop_front();
      const int d = dist[idx(u, w)];
      if (d >= limit) break;
      const auto& nbrs = plain.adjacency[static_cast<std::size_t>(u)];
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        const int v = nbrs[i];
        const int nw = w + cross[static_cast<std::size_t>(u)][i];
        if (nw < -max_length || nw > max_length) continue;
        if (v == s && nw == 1) {
          found = d + 1;
          break;
        }
        if (dist[idx(v, nw)] == kUnreached) {
          dist[idx(v, nw)] = d + 1;
          queue.emplace_back(v, nw);
        }
      }
    }
    if (found != 0 && (best == 0 || found < best)) best = found;
  }
  return best;
}

std::vector<Walk> enumerate_cycles(const Graph& g, int min_length, int max_length) {
  std::vector<Walk> out;
  const int n = g.vertex_count;
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  std::vector<int> dist(static_cast<std::size_t>(n));
  Walk path;
  for (int s = 0; s < n; ++s) {
    // Distances to s inside the vertices >= s bound the remaining length.
    std::fill(dist.begin(), dist.end(), kUnreached);
    dist[static_cast<std::size_t>(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : g.adjacency[static_cast<std::size_t>(u)]) {
        if (v > s && dist[static_cast<std::size_t>(v)] == kUnreached) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        }
      }
    }
    path.assign(1, s);
    on_path[static_cast<std::size_t>(s)] = true;
    auto dfs = [&](auto&& self, int u) -> void {
      const int len = static_cast<int>(path.size());
      for (int v : g.adjacency[static_cast<std::size_t>(u)]) {
        if (v == s) {
          if (len >= 3 && len >= min_length && len <= max_length && path[1] < path.back()) out.push_back(path);
          continue;
        }
        if (v < s || on_path[static_cast<std::size_t>(v)]) continue;
        const int d = dist[static_cast<std::size_t>(v)];
        if (d == kUnreached || len + d > max_length) continue;
        path.push_back(v);
        on_path[static_cast<std::size_t>(v)] = true;
        self(self, v);
        on_path[static_cast<std::size_t>(v)] = false;
        path.pop_back();
      }
    };
    dfs(dfs, s);
    on_path[static_cast<std::size_t>(s)] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Walk> noncontractible_cycles(const EmbeddedGraph& g, const Cocycle& cocycle, int length) {
  std::vector<Walk> out;
  for (Walk& c : enumerate_cycles(underlying_graph(g), length, length)) {
    if (!is_contractible(cocycle, c)) out.push_back(std::move(c));
  }
  return out;
}

CycleWitness shortest_noncontractible(const EmbeddedGraph& g) {
  require_cylinder(g, "shortest_noncontractible");
  const Cocycle cocycle = build_cocycle(g);
  int bound = std::numeric_limits<int>::max();
  for (const Walk& c : g.cuffs) bound = std::min(bound, static_cast<int>(c.size()));
  const int length = noncontractible_girth(g, cocycle, bound);
  if (length == 0) throw Error("shortest_noncontractible: cuff walks are not non-contractible");
  auto cycles = noncontractible_cycles(g, cocycle, length);
  if (cycles.empty()) throw Error("shortest_noncontractible: covering search and enumeration disagree");
  return {length, cycles.front()};
}

int cuff_distance(const EmbeddedGraph& g) {
  require_cylinder(g, "cuff_distance");
  const auto dist = bfs_distances(underlying_graph(g), g.cuffs[0]);
  int best = kUnreached;
  for (int v : g.cuffs[1]) best = std::min(best, dist[static_cast<std::size_t>(v)]);
  return best;
}

std::vector<int> shortest_cuff_path(const EmbeddedGraph& g) {
  require_cylinder(g, "shortest_cuff_path");
  const Graph plain = underlying_graph(g);
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count), -1);
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count), kUnreached);
  std::deque<int> queue;
  std::vector<int> starts = g.cuffs[0];
  std::sort(starts.begin(), starts.end());
  for (int s : starts) {
    dist[static_cast<std::size_t>(s)] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : plain.adjacency[static_cast<std::size_t>(u)]) {
      if (dist[static_cast<std::size_t>(v)] == kUnreached) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        parent[static_cast<std::size_t>(v)] = u;
        queue.push_back(v);
      }
    }
  }
  int end = -1;
  for (int v : g.cuffs[1]) {
    if (end == -1 || dist[static_cast<std::size_t>(v)] < dist[static_cast<std::size_t>(end)] ||
        (dist[static_cast<std::size_t>(v)] == dist[static_cast<std::size_t>(end)] && v < end)) {
      end = v;
    }
  }
  if (dist[static_cast<std::size_t>(end)] == 0) return {};
  std::vector<int> path;
  for (int v = end; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<int> walk_sides(const EmbeddedGraph& g, const Walk& c) {
  require_cylinder(g, "walk_sides");
  std::set<Edge> cut;
  for (const Edge& e : walk_edges(c)) cut.insert(e);
  const auto uses = edge_uses(g);
  std::vector<std::vector<int>> dual(static_cast<std::size_t>(g.walk_count()));
  for (const auto& [edge, list] : uses) {
    if (list.size() != 2 || cut.contains(edge)) continue;
    dual[static_cast<std::size_t>(list[0].walk)].push_back(list[1].walk);
    dual[static_cast<std::size_t>(list[1].walk)].push_back(list[0].walk);
  }
  const int source = static_cast<int>(g.faces.size());
  std::vector<int> side(static_cast<std::size_t>(g.walk_count()), 2);
  side[static_cast<std::size_t>(source)] = 1;
  std::deque<int> queue{source};
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    for (int b : dual[static_cast<std::size_t>(a)]) {
      if (side[static_cast<std::size_t>(b)] == 2) {
        side[static_cast<std::size_t>(b)] = 1;
        queue.push_back(b);
      }
    }
  }
  if (side[static_cast<std::size_t>(source + 1)] == 1) {
    throw PreconditionError("walk_sides: cycle does not separate the cuffs (contractible)");
  }
  return side;
}

Identified identify_across_quad(const EmbeddedGraph& g, int face_index, int z1_position) {
  const Walk& f = g.faces.at(static_cast<std::size_t>(face_index));
  if (f.size() != 4) throw PreconditionError("identify_across_quad: face is not a 4-face");
  auto at = [&](int i) { return f[static_cast<std::size_t>((z1_position + i) % 4)]; };
  const int z2 = at(1);
  const int z4 = at(3);
  if (z2 == z4 || underlying_graph(g).has_edge(z2, z4)) {
    throw PreconditionError("identify_across_quad: identification would create a loop");
  }
  auto rename = [&](Walk w) {
    for (int& v : w) {
      if (v == z4) v = z2;
    }
    return w;
  };
  std::vector<Walk> faces;
  for (int i = 0; i < static_cast<int>(g.faces.size()); ++i) {
    if (i != face_index) faces.push_back(rename(g.faces[static_cast<std::size_t>(i)]));
  }
  std::vector<Walk> cuffs;
  for (const Walk& c : g.cuffs) cuffs.push_back(rename(c));
  const EmbeddedGraph merged = from_walks(g.surface, g.vertex_count, std::move(faces), std::move(cuffs));
  Relabeled r = compact(merged);
  const auto problems = validate(r.graph);
  if (!problems.empty()) {
    throw PreconditionError("identify_across_quad: result is not a valid embedding (" +
                            problems.front().what + ", " + problems.front().locus + ")");
  }
  Identified out{std::move(r.graph), std::move(r.old_to_new)};
  out.old_to_new[static_cast<std::size_t>(z4)] = out.old_to_new[static_cast<std::size_t>(z2)];
  return out;
}

Piece cut_along_path(const EmbeddedGraph& g, const std::vector<int>& input_path) {
  require_cylinder(g, "cut_along_path");
  if (input_path.size() < 2) throw PreconditionError("cut_along_path: endpoints must lie on distinct cuffs");
  const std::set<int> cuff1(g.cuffs[0].begin(), g.cuffs[0].end());
  const std::set<int> cuff2(g.cuffs[1].begin(), g.cuffs[1].end());
  std::vector<int> path = input_path;
  if (cuff2.contains(path.front()) && cuff1.contains(path.back()) &&
      !(cuff1.contains(path.front()) && cuff2.contains(path.back()))) {
    std::reverse(path.begin(), path.end());
  }
  const int len = static_cast<int>(path.size()) - 1;
  if (!cuff1.contains(path.front()) || !cuff2.contains(path.back()) || cuff2.contains(path.front()) ||
      cuff1.contains(path.back())) {
    throw PreconditionError("cut_along_path: endpoints must lie on distinct cuffs");
  }
  const Graph plain = underlying_graph(g);
  std::set<int> distinct(path.begin(), path.end());
  if (static_cast<int>(distinct.size()) != len + 1) throw PreconditionError("cut_along_path: path is not simple");
  for (int i = 0; i < len; ++i) {
    if (!plain.has_edge(path[static_cast<std::size_t>(i)], path[static_cast<std::size_t>(i + 1)])) {
      throw PreconditionError("cut_along_path: consecutive path vertices are not adjacent");
    }
  }
  for (int i = 1; i < len; ++i) {
    const int v = path[static_cast<std::size_t>(i)];
    if (cuff1.contains(v) || cuff2.contains(v)) throw PreconditionError("cut_along_path: path touches a cuff in its interior");
  }

  const int n = g.vertex_count;
  const int cuff1_walk = static_cast<int>(g.faces.size());
  const int cuff2_walk = cuff1_walk + 1;
  // corner (walk, position) -> duplicated copy id for corners on the right side
  std::map<std::pair<int, int>, int> right;
  for (int i = 0; i <= len; ++i) {
    const int v = path[static_cast<std::size_t>(i)];
    const auto corners = corners_around(g, v);
    const int back = i > 0 ? path[static_cast<std::size_t>(i - 1)] : -1;
    const int fwd = i < len ? path[static_cast<std::size_t>(i + 1)] : -1;
    // Start at the corner entered along the path and walk the rotation; the
    // side flips when the other path edge (or the cuff corner) is passed.
    const int start_prev = i > 0 ? back : fwd;
    auto it = std::find_if(corners.begin(), corners.end(), [&](const Corner& c) { return c.prev == start_prev; });
    const std::size_t start = static_cast<std::size_t>(it - corners.begin());
    bool on_right = (i == 0);  // at p0 the start corner is entered backwards
    for (std::size_t step = 0; step < corners.size(); ++step) {
      const Corner& c = corners[(start + step) % corners.size()];
      if (step > 0) {
        if (i > 0 && i < len && c.prev == fwd) on_right = true;
      }
      const bool is_cuff_corner = (i == 0 && c.walk == cuff1_walk) || (i == len && c.walk == cuff2_walk);
      if (is_cuff_corner) {
        on_right = (i == len);  // after the cuff corner: left at p0, right at pL
        continue;
      }
      if (on_right) right[{c.walk, c.position}] = n + i;
    }
  }

  std::vector<Walk> faces;
  for (int w = 0; w < static_cast<int>(g.faces.size()); ++w) {
    Walk f = g.faces[static_cast<std::size_t>(w)];
    for (int p = 0; p < static_cast<int>(f.size()); ++p) {
      auto it = right.find({w, p});
      if (it != right.end()) f[static_cast<std::size_t>(p)] = it->second;
    }
    faces.push_back(std::move(f));
  }

  auto arc = [](const Walk& cuff, int v) {
    // cuff vertices from the successor of v around to its predecessor
    const auto k = cuff.size();
    const auto pos = static_cast<std::size_t>(std::find(cuff.begin(), cuff.end(), v) - cuff.begin());
    Walk out;
    for (std::size_t j = 1; j < k; ++j) out.push_back(cuff[(pos + j) % k]);
    return out;
  };
  Walk boundary;
  for (int i = 0; i <= len; ++i) boundary.push_back(n + i);
  for (int v : arc(g.cuffs[1], path.back())) boundary.push_back(v);
  for (int i = len; i >= 0; --i) boundary.push_back(path[static_cast<std::size_t>(i)]);
  for (int v : arc(g.cuffs[0], path.front())) boundary.push_back(v);

  Piece out;
  out.graph = from_walks(Surface::Disk, n + len + 1, std::move(faces), {std::move(boundary)});
  const auto problems = validate(out.graph);
  if (!problems.empty()) {
    throw Error("cut_along_path: result is not a valid disk embedding (" + problems.front().what + ")");
  }
  out.to_parent.resize(static_cast<std::size_t>(n + len + 1));
  for (int v = 0; v < n; ++v) out.to_parent[static_cast<std::size_t>(v)] = v;
  for (int i = 0; i <= len; ++i) out.to_parent[static_cast<std::size_t>(n + i)] = path[static_cast<std::size_t>(i)];
  return out;
}

}  // namespace tfc
