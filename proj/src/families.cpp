#include "tfc/families.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace tfc {

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v); }

// Index of the walk containing the directed step u -> v, and the position of u.
std::pair<int, int> find_step(const std::vector<Walk>& walks, int u, int v) {
  for (int w = 0; w < static_cast<int>(walks.size()); ++w) {
    const Walk& walk = walks[at(w)];
    for (std::size_t i = 0; i < walk.size(); ++i) {
      if (walk[i] == u && walk[(i + 1) % walk.size()] == v) return {w, static_cast<int>(i)};
    }
  }
  throw Error("no walk traverses " + std::to_string(u) + "->" + std::to_string(v));
}

Walk rotate_to(const Walk& w, int position) {
  Walk out;
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w[(static_cast<std::size_t>(position) + i) % w.size()]);
  return out;
}

// Planar drawing of a Thomas-Walls graph as a list of face walks.
struct Planar {
  int vertex_count = 0;
  std::vector<Walk> faces;
};

// Edges lying in two triangular faces, sorted.
std::vector<Edge> two_triangle_edges(const Planar& p) {
  std::map<Edge, int> triangles_at;
  for (const Walk& f : p.faces) {
    if (f.size() != 3) continue;
    for (const Edge& e : walk_edges(f)) ++triangles_at[e];
  }
  std::vector<Edge> out;
  for (const auto& [e, c] : triangles_at) {
    if (c == 2) out.push_back(e);
  }
  return out;
}

Planar thomas_walls_planar(int n) {
  if (n < 1) throw PreconditionError("thomas-walls: n must be at least 1");
  Planar p{4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}};
  for (int step = 1; step < n; ++step) {
    const auto spine = two_triangle_edges(p);
    if (spine.empty()) throw Error("thomas-walls: no edge lies in two triangles");
    const int u = spine.front().first;
    const int v = spine.front().second;
    const auto [f1, pos1] = find_step(p.faces, u, v);
    const auto [f2, pos2] = find_step(p.faces, v, u);
    const int pv = rotate_to(p.faces[at(f1)], pos1)[2];
    const int qv = rotate_to(p.faces[at(f2)], pos2)[2];
    const int x = p.vertex_count;
    const int y = x + 1;
    const int z = x + 2;
    p.vertex_count += 3;
    p.faces[at(f1)] = {v, pv, u, x, y};
    p.faces[at(f2)] = {u, qv, v, z, x};
    p.faces.push_back({x, z, y});
    p.faces.push_back({v, y, z});
  }
  return p;
}

// Diamond around an edge ab shared by triangles [a,b,c] and [b,a,d]:
// the merged walk [a,d,b,c] and the indices of the two triangles.
struct Diamond {
  Walk cycle;
  int face_ab = 0;
  int face_ba = 0;
};

Diamond diamond_at(const Planar& p, const Edge& e) {
  const auto [a, b] = e;
  const auto [f1, pos1] = find_step(p.faces, a, b);
  const auto [f2, pos2] = find_step(p.faces, b, a);
  const int c = rotate_to(p.faces[at(f1)], pos1)[2];
  const int d = rotate_to(p.faces[at(f2)], pos2)[2];
  return {{a, d, b, c}, f1, f2};
}

EmbeddedGraph disk_with_least_face_as_cuff(const Planar& p) {
  std::vector<Walk> faces;
  for (const Walk& f : p.faces) faces.push_back(canonical_walk(f));
  const auto least = std::min_element(faces.begin(), faces.end());
  Walk cuff = *least;
  faces.erase(least);
  return from_walks(Surface::Disk, p.vertex_count, std::move(faces), {std::move(cuff)});
}

void require_valid_output(const EmbeddedGraph& g, const std::string& family) {
  const auto problems = validate(g);
  if (!problems.empty()) {
    throw Error(family + ": generated graph is invalid (" + problems.front().what + ", " + problems.front().locus + ")");
  }
}

EmbeddedGraph swapped(EmbeddedGraph g) {
  std::swap(g.cuffs[0], g.cuffs[1]);
  return g;
}

// Inserts a new vertex into the edge uv in every walk that traverses it.
EmbeddedGraph subdivide(const EmbeddedGraph& g, int u, int v) {
  const int s = g.vertex_count;
  auto fix = [&](Walk w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const int a = w[i];
      const int b = w[(i + 1) % w.size()];
      if ((a == u && b == v) || (a == v && b == u)) {
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(i + 1), s);
        return w;
      }
    }
    return w;
  };
  std::vector<Walk> faces;
  std::vector<Walk> cuffs;
  for (const Walk& f : g.faces) faces.push_back(fix(f));
  for (const Walk& c : g.cuffs) cuffs.push_back(fix(c));
  return from_walks(g.surface, s + 1, std::move(faces), std::move(cuffs));
}

EmbeddedGraph oriented_cylinder(int vertex_count, std::vector<Walk> faces, const Walk& cuff1, const Walk& cuff2) {
  std::vector<Walk> walks = faces;
  walks.push_back(cuff1);
  walks.push_back(cuff2);
  orient_consistently(walks, static_cast<int>(faces.size()));
  std::vector<Walk> cuffs{walks[walks.size() - 2], walks.back()};
  walks.resize(faces.size());
  return from_walks(Surface::Cylinder, vertex_count, std::move(walks), std::move(cuffs));
}

}  // namespace

ThomasWalls gen_thomas_walls(int n) {
  const Planar p = thomas_walls_planar(n);
  ThomasWalls out;
  out.embedding = disk_with_least_face_as_cuff(p);
  if (n >= 2) {
    const auto pairs = two_triangle_edges(p);
    if (pairs.size() != 2) throw Error("thomas-walls: expected exactly two interface pairs");
    for (const Edge& e : pairs) {
      out.interface_cycles.push_back(diamond_at(p, e).cycle);
      out.interface_pairs.push_back(e);
    }
  }
  require_valid_output(out.embedding, "thomas-walls");
  return out;
}

ThomasWalls gen_reduced_tw(int n) {
  if (n < 2) throw PreconditionError("reduced-tw: n must be at least 2");
  const Planar p = thomas_walls_planar(n);
  const auto pairs = two_triangle_edges(p);
  if (pairs.size() != 2) throw Error("reduced-tw: expected exactly two interface pairs");
  std::vector<Diamond> diamonds{diamond_at(p, pairs[0]), diamond_at(p, pairs[1])};
  std::vector<Edge> pair_list = pairs;
  if (canonical_walk(diamonds[1].cycle) < canonical_walk(diamonds[0].cycle)) {
    std::swap(diamonds[0], diamonds[1]);
    std::swap(pair_list[0], pair_list[1]);
  }
  std::set<int> merged;
  for (const Diamond& d : diamonds) {
    merged.insert(d.face_ab);
    merged.insert(d.face_ba);
  }
  std::vector<Walk> faces;
  for (int f = 0; f < static_cast<int>(p.faces.size()); ++f) {
    if (!merged.contains(f)) faces.push_back(p.faces[at(f)]);
  }
  ThomasWalls out;
  out.interface_cycles = {diamonds[0].cycle, diamonds[1].cycle};
  out.interface_pairs = pair_list;
  if (n == 2) {
    faces.push_back(diamonds[1].cycle);
    out.embedding = from_walks(Surface::Disk, p.vertex_count, std::move(faces), {diamonds[0].cycle});
  } else {
    out.embedding = from_walks(Surface::Cylinder, p.vertex_count, std::move(faces), {diamonds[0].cycle, diamonds[1].cycle});
  }
  require_valid_output(out.embedding, "reduced-tw");
  return out;
}

EmbeddedGraph gen_patch(int rings) {
  if (rings < 0) throw PreconditionError("patch: rings must be non-negative");
  const int levels = rings + 1;
  auto id = [](int level, int i) { return level * 6 + ((i % 6) + 6) % 6; };
  std::vector<Walk> faces;
  for (int j = 0; j + 1 < levels; ++j) {
    for (int i = 0; i < 6; ++i) faces.push_back({id(j, i + 1), id(j, i), id(j + 1, i), id(j + 1, i + 1)});
  }
  const int inner = levels - 1;
  const int hub = levels * 6;
  for (int i = 1; i < 6; i += 2) faces.push_back({id(inner, i + 1), id(inner, i), hub, id(inner, i + 2)});
  Walk cuff;
  for (int i = 0; i < 6; ++i) cuff.push_back(id(0, i));
  EmbeddedGraph g = from_walks(Surface::Disk, hub + 1, std::move(faces), {cuff});
  require_valid_output(g, "patch");
  return g;
}

std::optional<std::string> patch_violation(const EmbeddedGraph& p) {
  const auto problems = validate(p);
  if (!problems.empty()) return "invalid embedding: " + problems.front().what;
  if (p.surface != Surface::Disk) return std::string("patch must be a disk graph");
  const Walk& c = p.cuffs[0];
  if (c.size() != 6) return std::string("cuff length is not 6");
  const Graph u = underlying_graph(p);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 2; j < 6; ++j) {
      if (i == 0 && j == 5) continue;
      if (u.has_edge(c[i], c[j])) return "cuff has a chord " + std::to_string(c[i]) + "-" + std::to_string(c[j]);
    }
  }
  if (!is_quadrangulation(p)) return std::string("internal face of length other than 4");
  return std::nullopt;
}

EmbeddedGraph apply_patching(const EmbeddedGraph& g, const std::vector<int>& s, const std::vector<EmbeddedGraph>& patches) {
  require_valid(g, "apply_patching");
  if (s.size() != patches.size()) throw PreconditionError("apply_patching: one patch per vertex is required");
  const Graph base = underlying_graph(g);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.vertex_count) throw PreconditionError("apply_patching: vertex out of range");
    if (base.degree(s[i]) != 3) {
      throw PreconditionError("apply_patching: vertex " + std::to_string(s[i]) + " does not have degree 3");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (s[i] == s[j] || base.has_edge(s[i], s[j])) throw PreconditionError("apply_patching: set is not independent");
    }
    if (auto why = patch_violation(patches[i])) throw PreconditionError("apply_patching: " + *why);
  }

  EmbeddedGraph cur = g;
  for (std::size_t idx = 0; idx < s.size(); ++idx) {
    const int v = s[idx];
    const auto corners = corners_around(cur, v);
    if (corners.size() != 3) throw PreconditionError("apply_patching: vertex does not have three corners");
    int next_id = cur.vertex_count;
    const std::array<int, 3> nb{corners[0].prev, corners[1].prev, corners[2].prev};
    const std::array<int, 3> ring{v, next_id, next_id + 1};  // between nb[i] and nb[i+1]
    next_id += 2;
    auto walk_ref = [&](int w) -> Walk& {
      return w < static_cast<int>(cur.faces.size()) ? cur.faces[at(w)] : cur.cuffs[at(w - static_cast<int>(cur.faces.size()))];
    };
    for (int i = 0; i < 3; ++i) walk_ref(corners[at(i)].walk)[at(corners[at(i)].position)] = ring[at(i)];

    const std::array<int, 6> hexagon{nb[0], ring[2], nb[2], ring[1], nb[1], ring[0]};
    const EmbeddedGraph& patch = patches[idx];
    std::vector<int> to_cur(at(patch.vertex_count), -1);
    const Walk& pc = patch.cuffs[0];
    for (std::size_t j = 0; j < 6; ++j) to_cur[at(pc[j])] = hexagon[(6 - j) % 6];
    for (int pv = 0; pv < patch.vertex_count; ++pv) {
      if (to_cur[at(pv)] == -1) to_cur[at(pv)] = next_id++;
    }
    for (const Walk& f : patch.faces) {
      Walk mapped;
      for (int pv : f) mapped.push_back(to_cur[at(pv)]);
      cur.faces.push_back(std::move(mapped));
    }
    cur = from_walks(cur.surface, next_id, std::move(cur.faces), std::move(cur.cuffs));
  }
  require_valid_output(cur, "apply_patching");
  return cur;
}

std::vector<int> greedy_patching_set(const EmbeddedGraph& g) {
  std::set<int> on_cuffs;
  for (const Walk& c : g.cuffs) on_cuffs.insert(c.begin(), c.end());
  const Graph u = underlying_graph(g);
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count; ++v) {
    if (on_cuffs.contains(v) || u.degree(v) != 3) continue;
    if (std::any_of(out.begin(), out.end(), [&](int w) { return u.has_edge(v, w); })) continue;
    out.push_back(v);
  }
  return out;
}

ThomasWalls gen_patched_tw(int n, const std::vector<int>& s, int rings) {
  ThomasWalls base = gen_reduced_tw(n);
  for (int v : s) {
    for (const Walk& c : base.interface_cycles) {
      if (std::find(c.begin(), c.end(), v) != c.end()) {
        throw PreconditionError("patched-tw: vertex " + std::to_string(v) + " lies on an interface cycle");
      }
    }
  }
  const std::vector<EmbeddedGraph> patches(s.size(), gen_patch(rings));
  base.embedding = apply_patching(base.embedding, s, patches);
  return base;
}

EmbeddedGraph apply_framing(const EmbeddedGraph& g, const std::array<Edge, 2>& pairs, const std::array<FrameSide, 2>& sides) {
  require_valid(g, "apply_framing");
  if (g.surface != Surface::Cylinder) throw PreconditionError("apply_framing: not a cylinder graph");
  EmbeddedGraph out = g;
  int next_id = g.vertex_count;
  for (std::size_t i = 0; i < 2; ++i) {
    const Walk c = g.cuffs[i];
    if (c.size() != 4) throw PreconditionError("apply_framing: cuff " + std::to_string(i + 1) + " is not a 4-cycle");
    int p = -1;
    for (int j = 0; j < 4; ++j) {
      if (make_edge(c[at(j)], c[at((j + 2) % 4)]) == make_edge(pairs[i].first, pairs[i].second)) {
        p = j;
        break;
      }
    }
    if (p == -1) throw PreconditionError("apply_framing: pair is not a diagonal of cuff " + std::to_string(i + 1));
    const Walk r = rotate_to(c, p);
    const int x = r[0];
    const int y = r[1];
    const int z = r[2];
    const int w = r[3];
    const int y2 = sides[i].new_y ? next_id++ : y;
    const int w2 = sides[i].new_w ? next_id++ : w;
    if (sides[i].new_y) out.faces.push_back({x, y, z, y2});
    if (sides[i].new_w) out.faces.push_back({z, w, x, w2});
    out.cuffs[i] = {x, y2, z, w2};
  }
  out = from_walks(Surface::Cylinder, next_id, std::move(out.faces), std::move(out.cuffs));
  require_valid_output(out, "apply_framing");
  return out;
}

EmbeddedGraph gen_cylinder_grid(int k, int m) {
  if (k < 3 || m < 1) throw PreconditionError("grid: requires k >= 3 and m >= 1");
  auto id = [k](int j, int i) { return j * k + ((i % k) + k) % k; };
  std::vector<Walk> faces;
  for (int j = 0; j + 1 < m; ++j) {
    for (int i = 0; i < k; ++i) faces.push_back({id(j, i + 1), id(j, i), id(j + 1, i), id(j + 1, i + 1)});
  }
  Walk c1;
  Walk c2;
  for (int i = 0; i < k; ++i) {
    c1.push_back(id(0, i));
    c2.push_back(id(m - 1, k - 1 - i));
  }
  EmbeddedGraph g = from_walks(Surface::Cylinder, k * m, std::move(faces), {c1, c2});
  require_valid_output(g, "grid");
  return g;
}

EmbeddedGraph feq_gadget() {
  // a=0, b=1, c=2, d=3, e=4; the cuffs abc and aed share a.
  return from_walks(Surface::Cylinder, 5, {{2, 1, 0, 3}, {3, 4, 0, 2}}, {{0, 1, 2}, {0, 4, 3}});
}

EmbeddedGraph glue(const EmbeddedGraph& a, const EmbeddedGraph& b, int shift) {
  if (a.surface != Surface::Cylinder || b.surface != Surface::Cylinder) throw PreconditionError("glue: not cylinder graphs");
  const Walk& top = a.cuffs[1];
  const Walk& bottom = b.cuffs[0];
  const int k = static_cast<int>(top.size());
  if (static_cast<int>(bottom.size()) != k) throw PreconditionError("glue: cuff lengths differ");
  std::vector<int> to_a(at(b.vertex_count), -1);
  for (int i = 0; i < k; ++i) to_a[at(bottom[at(((shift - i) % k + k) % k)])] = top[at(i)];
  int next_id = a.vertex_count;
  for (int v = 0; v < b.vertex_count; ++v) {
    if (to_a[at(v)] == -1) to_a[at(v)] = next_id++;
  }
  auto map_walk = [&](const Walk& w) {
    Walk out;
    for (int v : w) out.push_back(to_a[at(v)]);
    return out;
  };
  std::vector<Walk> faces = a.faces;
  for (const Walk& f : b.faces) faces.push_back(map_walk(f));
  EmbeddedGraph g = from_walks(Surface::Cylinder, next_id, std::move(faces), {a.cuffs[0], map_walk(b.cuffs[1])});
  require_valid_output(g, "glue");
  return g;
}

EmbeddedGraph gen_feq_chain(int t) {
  if (t < 1) throw PreconditionError("feq-chain: t must be at least 1");
  EmbeddedGraph g = feq_gadget();
  for (int i = 1; i < t; ++i) g = glue(g, feq_gadget(), 1);
  return g;
}

EmbeddedGraph gen_near_33_quadrangulation(int m, std::optional<int> subdivide_cuff1, std::optional<int> subdivide_cuff2) {
  if (m < 2) throw PreconditionError("near33: m must be at least 2");
  EmbeddedGraph g = gen_cylinder_grid(3, m);
  const std::array<std::optional<int>, 2> choice{subdivide_cuff1, subdivide_cuff2};
  for (std::size_t i = 0; i < 2; ++i) {
    if (!choice[i]) continue;
    const int p = *choice[i];
    if (p < 0 || p > 2) throw PreconditionError("near33: edge position must be 0, 1 or 2");
    const Walk& c = g.cuffs[i];
    g = subdivide(g, c[at(p)], c[at((p + 1) % 3)]);
  }
  require_valid_output(g, "near33");
  return g;
}

EmbeddedGraph gen_flip_chain(int k, int rounds) {
  if (k < 3 || rounds < 0) throw PreconditionError("flip-chain: requires k >= 3 and rounds >= 0");
  Walk start;
  for (int i = 0; i < k; ++i) start.push_back(i);
  Walk cur = start;
  int n = k;
  std::vector<Walk> faces;
  for (int step = 0; step < rounds * k; ++step) {
    const int j = step % k;
    const int x = n++;
    faces.push_back({cur[at((j + k - 1) % k)], cur[at(j)], cur[at((j + 1) % k)], x});
    cur[at(j)] = x;
  }
  EmbeddedGraph g = oriented_cylinder(n, std::move(faces), start, cur);
  require_valid_output(g, "flip-chain");
  return g;
}

EmbeddedGraph gen_split_grid(int k, int m) {
  if (m < 2) throw PreconditionError("split-grid: m must be at least 2");
  EmbeddedGraph g = gen_cylinder_grid(k, m);
  const Walk f = g.faces[0];
  const int x = g.vertex_count;
  g.faces[0] = {f[0], f[1], f[2], x};
  g.faces.push_back({f[2], f[3], f[0], x});
  g = from_walks(Surface::Cylinder, x + 1, std::move(g.faces), std::move(g.cuffs));
  require_valid_output(g, "split-grid");
  return g;
}

EmbeddedGraph gen_taper(int inner) {
  if (inner < 3) throw PreconditionError("taper: inner length must be at least 3");
  const int l = inner;
  auto c = [l](int i) { return ((i % l) + l) % l; };
  auto o = [l](int i) { return l + i; };
  std::vector<Walk> faces;
  for (int i = 0; i < l; ++i) faces.push_back({c(i), c(i + 1), o(i + 1), o(i)});
  faces.push_back({c(0), o(l), o(l + 1), o(0)});
  Walk outer;
  Walk inner_cycle;
  for (int i = 0; i < l + 2; ++i) outer.push_back(o(i));
  for (int i = 0; i < l; ++i) inner_cycle.push_back(c(i));
  EmbeddedGraph g = oriented_cylinder(2 * l + 2, std::move(faces), outer, inner_cycle);
  require_valid_output(g, "taper");
  return g;
}

EmbeddedGraph gen_tapered(int inner, int steps, int m) {
  if (steps < 1) throw PreconditionError("tapered: steps must be at least 1");
  EmbeddedGraph g = gen_taper(inner + 2 * (steps - 1));
  for (int s = steps - 2; s >= 0; --s) g = glue(g, gen_taper(inner + 2 * s));
  g = glue(g, gen_cylinder_grid(inner, m));
  for (int s = 0; s < steps; ++s) g = glue(g, swapped(gen_taper(inner + 2 * s)));
  return g;
}

EmbeddedGraph gen_capped_grid(int t1, int m, int t2) {
  return glue(glue(gen_feq_chain(t1), gen_cylinder_grid(3, m), 1), gen_feq_chain(t2), 1);
}

// ---------------------------------------------------------------------------
// Named generation

namespace {

class Params {
 public:
  Params(const GenSpec& spec, std::set<std::string> allowed) : spec_(spec) {
    for (const auto& [key, value] : spec.params) {
      if (!allowed.contains(key)) throw Error(spec.family + ": unknown parameter '" + key + "'");
    }
  }

  int integer(const std::string& key, std::optional<int> fallback = std::nullopt) const {
    const auto it = spec_.params.find(key);
    if (it == spec_.params.end()) {
      if (fallback) return *fallback;
      throw Error(spec_.family + ": missing parameter '" + key + "'");
    }
    return parse_int(key, it->second);
  }

  std::optional<int> optional_integer(const std::string& key) const {
    const auto it = spec_.params.find(key);
    if (it == spec_.params.end() || it->second == "none") return std::nullopt;
    return parse_int(key, it->second);
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    const auto it = spec_.params.find(key);
    return it == spec_.params.end() ? fallback : it->second;
  }

  bool is_new(const std::string& key) const {
    const std::string v = text(key, "new");
    if (v == "new") return true;
    if (v == "reuse") return false;
    throw Error(spec_.family + ": parameter '" + key + "' must be new or reuse");
  }

 private:
  int parse_int(const std::string& key, const std::string& value) const {
    try {
      std::size_t used = 0;
      const int v = std::stoi(value, &used);
      if (used == value.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw Error(spec_.family + ": parameter '" + key + "' is not an integer: " + value);
  }

  const GenSpec& spec_;
};

std::vector<int> parse_plan(const std::string& plan, const EmbeddedGraph& base) {
  if (plan == "greedy") return greedy_patching_set(base);
  if (plan == "none") return {};
  std::vector<int> out;
  std::stringstream ss(plan);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::logic_error&) {
      throw Error("patched-tw: malformed plan entry '" + item + "'");
    }
  }
  return out;
}

using Builder = std::function<EmbeddedGraph(const GenSpec&)>;

const std::map<std::string, Builder>& builders() {
  static const std::map<std::string, Builder> table = {
      {"thomas-walls",
       [](const GenSpec& s) { return gen_thomas_walls(Params(s, {"n"}).integer("n")).embedding; }},
      {"reduced-tw", [](const GenSpec& s) { return gen_reduced_tw(Params(s, {"n"}).integer("n")).embedding; }},
      {"patch", [](const GenSpec& s) { return gen_patch(Params(s, {"rings"}).integer("rings", 0)); }},
      {"patched-tw",
       [](const GenSpec& s) {
         const Params p(s, {"n", "plan", "rings"});
         const int n = p.integer("n");
         const auto plan = parse_plan(p.text("plan", "greedy"), gen_reduced_tw(n).embedding);
         return gen_patched_tw(n, plan, p.integer("rings", 0)).embedding;
       }},
      {"framed-tw",
       [](const GenSpec& s) {
         const Params p(s, {"n", "y1", "w1", "y2", "w2"});
         const ThomasWalls base = gen_reduced_tw(p.integer("n"));
         if (base.embedding.surface != Surface::Cylinder) throw Error("framed-tw: n must be at least 3");
         return apply_framing(base.embedding, {base.interface_pairs[0], base.interface_pairs[1]},
                              {FrameSide{p.is_new("y1"), p.is_new("w1")}, FrameSide{p.is_new("y2"), p.is_new("w2")}});
       }},
      {"grid",
       [](const GenSpec& s) {
         const Params p(s, {"k", "m"});
         return gen_cylinder_grid(p.integer("k"), p.integer("m"));
       }},
      {"feq-chain", [](const GenSpec& s) { return gen_feq_chain(Params(s, {"t"}).integer("t")); }},
      {"near33",
       [](const GenSpec& s) {
         const Params p(s, {"m", "s1", "s2"});
         return gen_near_33_quadrangulation(p.integer("m"), p.optional_integer("s1"), p.optional_integer("s2"));
       }},
      {"flip-chain",
       [](const GenSpec& s) {
         const Params p(s, {"k", "rounds"});
         return gen_flip_chain(p.integer("k"), p.integer("rounds"));
       }},
      {"split-grid",
       [](const GenSpec& s) {
         const Params p(s, {"k", "m"});
         return gen_split_grid(p.integer("k"), p.integer("m"));
       }},
      {"capped-grid",
       [](const GenSpec& s) {
         const Params p(s, {"t1", "m", "t2"});
         return gen_capped_grid(p.integer("t1"), p.integer("m"), p.integer("t2"));
       }},
      {"tapered",
       [](const GenSpec& s) {
         const Params p(s, {"inner", "steps", "m"});
         return gen_tapered(p.integer("inner"), p.integer("steps"), p.integer("m"));
       }},
  };
  return table;
}

}  // namespace

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& [name, builder] : builders()) out.push_back(name);
  return out;
}

EmbeddedGraph generate(const GenSpec& spec) {
  const auto& table = builders();
  const auto it = table.find(spec.family);
  if (it == table.end()) throw Error("unknown family '" + spec.family + "'");
  return it->second(spec);
}

std::string format_params(const std::map<std::string, std::string>& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ' ';
    out += key + "=" + value;
  }
  return out;
}

}  // namespace tfc
