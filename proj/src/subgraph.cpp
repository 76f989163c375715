#include <algorithm>
#include <map>
#include <set>

#include "tfc/embedding.hpp"
#include "tfc/homotopy.hpp"

namespace tfc {

namespace {

// Orients cycle c like the walks on the requested side traverse its edges.
Walk orient_like_side(const EmbeddedGraph& g, const Walk& c, const std::vector<int>& sides, int side) {
  const int u = c[0];
  const int v = c[1];
  for (int w = 0; w < g.walk_count(); ++w) {
    if (sides[static_cast<std::size_t>(w)] != side) continue;
    const Walk& walk = g.walk(w);
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const int a = walk[i];
      const int b = walk[(i + 1) % walk.size()];
      if (a == u && b == v) return c;
      if (a == v && b == u) return reversed(c);
    }
  }
  throw Error("subgraph_between: no walk on the expected side of the cycle");
}

}  // namespace

Piece subgraph_between(const EmbeddedGraph& g, const Walk& a, const Walk& b) {
  if (g.surface != Surface::Cylinder) throw PreconditionError("subgraph_between: graph is not on the cylinder");
  const Cocycle cocycle = build_cocycle(g);
  if (is_contractible(cocycle, a) || is_contractible(cocycle, b)) {
    throw PreconditionError("subgraph_between: cycle is contractible");
  }
  const auto side_a = walk_sides(g, a);
  const auto side_b = walk_sides(g, b);

  std::map<Edge, std::vector<int>> walks_of_edge;
  for (int w = 0; w < g.walk_count(); ++w) {
    for (const Edge& e : walk_edges(g.walk(w))) walks_of_edge[e].push_back(w);
  }
  const auto edges_a = walk_edges(a);
  const auto edges_b = walk_edges(b);
  const std::set<Edge> set_a(edges_a.begin(), edges_a.end());
  const std::set<Edge> set_b(edges_b.begin(), edges_b.end());
  auto strictly_on = [&](const Edge& e, const std::vector<int>& sides, int side) {
    const auto& ws = walks_of_edge.at(e);
    return std::all_of(ws.begin(), ws.end(), [&](int w) { return sides[static_cast<std::size_t>(w)] == side; });
  };
  for (const Edge& e : set_b) {
    if (!set_a.contains(e) && strictly_on(e, side_a, 1)) throw PreconditionError("subgraph_between: cycles cross");
  }
  for (const Edge& e : set_a) {
    if (!set_b.contains(e) && strictly_on(e, side_b, 2)) throw PreconditionError("subgraph_between: cycles cross");
  }

  std::vector<Walk> faces;
  std::set<int> vertices(a.begin(), a.end());
  vertices.insert(b.begin(), b.end());
  for (int f = 0; f < static_cast<int>(g.faces.size()); ++f) {
    if (side_a[static_cast<std::size_t>(f)] == 2 && side_b[static_cast<std::size_t>(f)] == 1) {
      faces.push_back(g.faces[static_cast<std::size_t>(f)]);
      vertices.insert(faces.back().begin(), faces.back().end());
    }
  }
  const Walk cuff1 = orient_like_side(g, a, side_a, 1);
  const Walk cuff2 = orient_like_side(g, b, side_b, 2);

  Piece piece;
  piece.to_parent.assign(vertices.begin(), vertices.end());
  std::vector<int> to_piece(static_cast<std::size_t>(g.vertex_count), -1);
  for (std::size_t i = 0; i < piece.to_parent.size(); ++i) to_piece[static_cast<std::size_t>(piece.to_parent[i])] = static_cast<int>(i);
  auto map_walk = [&](const Walk& w) {
    Walk out;
    for (int v : w) out.push_back(to_piece[static_cast<std::size_t>(v)]);
    return out;
  };
  for (Walk& f : faces) f = map_walk(f);
  piece.graph = from_walks(Surface::Cylinder, static_cast<int>(vertices.size()), std::move(faces),
                           {map_walk(cuff1), map_walk(cuff2)});
  const auto problems = validate(piece.graph);
  if (!problems.empty()) {
    throw Error("subgraph_between: piece is not a valid cylinder embedding (" + problems.front().what + ")");
  }
  return piece;
}

}  // namespace tfc
