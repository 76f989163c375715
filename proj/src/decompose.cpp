#include "tfc/decompose.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tfc/feq.hpp"
#include "tfc/homotopy.hpp"

namespace tfc {

namespace {

int length(const Walk& w) { return static_cast<int>(w.size()); }

int longer_cuff(const EmbeddedGraph& g) { return std::max(length(g.cuffs[0]), length(g.cuffs[1])); }

bool is_cuff(const EmbeddedGraph& g, const Walk& c) { return same_cycle(c, g.cuffs[0]) || same_cycle(c, g.cuffs[1]); }

std::vector<Walk> noncuff_cycles(const EmbeddedGraph& g, const Cocycle& cocycle, int len) {
  std::vector<Walk> out;
  for (Walk& c : noncontractible_cycles(g, cocycle, len)) {
    if (!is_cuff(g, c)) out.push_back(std::move(c));
  }
  return out;
}

Walk to_parent(const Piece& p, const Walk& w) {
  Walk out;
  for (int v : w) out.push_back(p.to_parent[static_cast<std::size_t>(v)]);
  return out;
}

// First candidate optimizing the vertex count of the piece produced by `piece`.
template <typename MakePiece, typename Accept>
std::optional<Walk> pick(const std::vector<Walk>& candidates, MakePiece piece, Accept accept, bool maximize) {
  std::optional<Walk> best;
  int best_size = 0;
  for (const Walk& c : candidates) {
    const Piece p = piece(c);
    if (!accept(p)) continue;
    const int size = p.graph.vertex_count;
    if (!best || (maximize ? size > best_size : size < best_size)) {
      best = c;
      best_size = size;
    }
  }
  return best;
}

bool forced(const EmbeddedGraph& piece) {
  if (piece.cuffs[0].size() != piece.cuffs[1].size() || !is_quadrangulation(piece)) return false;
  return static_cast<bool>(is_feq(piece));
}

std::optional<Walk> nonforced_middle(const EmbeddedGraph& piece, int k) {
  if (length(piece.cuffs[0]) != k || length(piece.cuffs[1]) != k) return std::nullopt;
  for (const Walk& mid : noncuff_cycles(piece, build_cocycle(piece), k)) {
    if (!forced(subgraph_between(piece, piece.cuffs[0], mid).graph) &&
        !forced(subgraph_between(piece, mid, piece.cuffs[1]).graph)) {
      return mid;
    }
  }
  return std::nullopt;
}

// Label predicate of a piece of a graph with parameters k and ell(g).
// `middle` receives K' for label (iv).
bool satisfies(PieceLabel label, const EmbeddedGraph& piece, int k, int ell_g, std::optional<Walk>* middle) {
  switch (label) {
    case PieceLabel::ShorterCuffs:
      return longer_cuff(piece) < k;
    case PieceLabel::LargerEll:
      return ell(piece) > ell_g;
    case PieceLabel::EllAboveK:
      return ell(piece) == k + 1;
    case PieceLabel::NonForcedSides: {
      if (length(piece.cuffs[0]) != k || length(piece.cuffs[1]) != k || ell(piece) != k) return false;
      auto mid = nonforced_middle(piece, k);
      if (middle) *middle = mid;
      return mid.has_value();
    }
    case PieceLabel::Forced:
      return forced(piece);
  }
  return false;
}

}  // namespace

const char* to_string(PieceLabel label) {
  switch (label) {
    case PieceLabel::ShorterCuffs: return "i";
    case PieceLabel::LargerEll: return "ii";
    case PieceLabel::EllAboveK: return "iii";
    case PieceLabel::NonForcedSides: return "iv";
    case PieceLabel::Forced: return "v";
  }
  return "?";
}

int ell(const EmbeddedGraph& g) {
  if (g.surface != Surface::Cylinder) throw PreconditionError("ell: not a cylinder graph");
  const int k = longer_cuff(g);
  const Cocycle cocycle = build_cocycle(g);
  for (int len = 3; len <= k; ++len) {
    if (!noncuff_cycles(g, cocycle, len).empty()) return len;
  }
  return k + 1;
}

Decomposition decompose(const EmbeddedGraph& g) {
  require_valid(g, "decompose");
  if (g.surface != Surface::Cylinder) throw PreconditionError("decompose: not a cylinder graph");
  if (!is_quadrangulation(g)) throw PreconditionError("decompose: internal face of length other than 4");
  const Walk& c1 = g.cuffs[0];
  const Walk& c2 = g.cuffs[1];
  if (length(c1) > length(c2)) throw PreconditionError("decompose: cuff 1 is longer than cuff 2");
  if (cuff_distance(g) == 0) throw PreconditionError("decompose: cuffs are not vertex-disjoint");

  const int k = length(c2);
  const int l = ell(g);
  const Cocycle cocycle = build_cocycle(g);
  auto below = [&](const Walk& c) { return subgraph_between(g, c1, c); };
  auto above = [&](const Walk& c) { return subgraph_between(g, c, c2); };
  auto any = [](const Piece&) { return true; };

  Decomposition d;
  if (l == k + 1) {
    d.cycles = {c1, c2};
    d.labels = {PieceLabel::EllAboveK};
  } else if (l < k) {
    const auto candidates = noncuff_cycles(g, cocycle, l);
    const Walk k2 = *pick(candidates, below, any, false);
    const Walk k3 = *pick(candidates, above, any, false);
    d.cycles = {c1, k2, k3, c2};
    d.labels = {PieceLabel::LargerEll, PieceLabel::ShorterCuffs, PieceLabel::LargerEll};
  } else {
    std::vector<Walk> candidates;
    for (Walk& c : noncontractible_cycles(g, cocycle, k)) {
      if (!same_cycle(c, c2)) candidates.push_back(std::move(c));
    }
    const Walk k2 = *pick(candidates, below, any, false);
    const Piece rest = above(k2);
    std::optional<PieceLabel> label;
    for (PieceLabel candidate : {PieceLabel::EllAboveK, PieceLabel::Forced, PieceLabel::NonForcedSides}) {
      if (satisfies(candidate, rest.graph, k, l, nullptr)) {
        label = candidate;
        break;
      }
    }
    if (label) {
      d.cycles = {c1, k2, c2};
      d.labels = {PieceLabel::LargerEll, *label};
    } else {
      const EmbeddedGraph& r = rest.graph;
      const auto in_rest = noncontractible_cycles(r, build_cocycle(r), k);
      auto r_below = [&](const Walk& c) { return subgraph_between(r, r.cuffs[0], c); };
      auto r_above = [&](const Walk& c) { return subgraph_between(r, c, r.cuffs[1]); };
      auto is_forced = [](const Piece& p) { return forced(p.graph); };
      const auto k3 = pick(in_rest, r_below, is_forced, true);
      const auto k4 = pick(in_rest, r_above, is_forced, true);
      if (!k3 || !k4) throw Error("decompose: no forced end pieces found");
      d.cycles = {c1, k2, to_parent(rest, *k3), to_parent(rest, *k4), c2};
      d.labels = {PieceLabel::LargerEll, PieceLabel::Forced, PieceLabel::EllAboveK, PieceLabel::Forced};
    }
  }

  for (std::size_t i = 0; i + 1 < d.cycles.size(); ++i) {
    const Piece p = subgraph_between(g, d.cycles[i], d.cycles[i + 1]);
    std::optional<Walk> mid;
    if (!satisfies(d.labels[i], p.graph, k, l, &mid)) {
      throw Error("decompose: piece " + std::to_string(i + 1) + " does not satisfy label (" + to_string(d.labels[i]) + ")");
    }
    d.middle.push_back(mid ? std::optional<Walk>(to_parent(p, *mid)) : std::nullopt);
    d.narrow.push_back(cuff_distance(p.graph) < 4 * longer_cuff(p.graph));
  }
  return d;
}

bool verify_decomposition(const EmbeddedGraph& g, const Decomposition& d) {
  try {
    const std::size_t n = d.cycles.size();
    if (n < 2 || n > 5 || d.labels.size() != n - 1) return false;
    if (!same_cycle(d.cycles.front(), g.cuffs[0]) || !same_cycle(d.cycles.back(), g.cuffs[1])) return false;
    const int k = std::max(length(g.cuffs[0]), length(g.cuffs[1]));
    const Cocycle cocycle = build_cocycle(g);
    for (const Walk& c : d.cycles) {
      if (length(c) > k || is_contractible(cocycle, c)) return false;
    }

    // Nesting: K_i lies weakly on the cuff-1 side of K_j for i < j.
    std::map<Edge, std::vector<int>> walks_of_edge;
    for (int w = 0; w < g.walk_count(); ++w) {
      for (const Edge& e : walk_edges(g.walk(w))) walks_of_edge[e].push_back(w);
    }
    std::vector<std::vector<int>> sides;
    for (const Walk& c : d.cycles) sides.push_back(walk_sides(g, c));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto ej = walk_edges(d.cycles[j]);
        const std::set<Edge> on_j(ej.begin(), ej.end());
        for (const Edge& e : walk_edges(d.cycles[i])) {
          if (on_j.contains(e)) continue;
          for (int w : walks_of_edge.at(e)) {
            if (sides[j][static_cast<std::size_t>(w)] != 1) return false;
          }
        }
      }
    }

    const int l = ell(g);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const Piece p = subgraph_between(g, d.cycles[i], d.cycles[i + 1]);
      if (!satisfies(d.labels[i], p.graph, k, l, nullptr)) return false;
    }
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace tfc
