#pragma once

#include <vector>

#include "tfc/embedding.hpp"

namespace tfc {

/// Integer 1-cochain dual to a cuff-to-cuff arc. On the cylinder a cycle is
/// non-contractible iff its signed crossing sum is nonzero.
class Cocycle {
 public:
  Cocycle() = default;
  Cocycle(std::vector<Edge> edges, std::vector<int> values);

  /// Crossing value of the directed step u -> v.
  int crossing(int u, int v) const;
  /// Signed crossing sum along a closed walk.
  int sum(const Walk& w) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& values() const { return values_; }

 private:
  std::vector<Edge> edges_;   // sorted
  std::vector<int> values_;   // value of the step first -> second
};

/// Picks a shortest dual path from the cuff-1 face to the cuff-2 face and
/// records the primal edges it crosses. `avoid_dual_edge` (an edge of g)
/// is never crossed when possible, which yields an alternative cocycle for
/// independence tests.
Cocycle build_cocycle(const EmbeddedGraph& g);
Cocycle build_cocycle(const EmbeddedGraph& g, const std::vector<Edge>& avoid);

bool is_contractible(const Cocycle& cocycle, const Walk& cycle);

struct CycleWitness {
  int length = 0;
  Walk cycle;
};

/// Minimum-length non-contractible cycle, ties broken by the least canonical
/// form. Length found by BFS in the cyclic cover, witness by enumeration.
CycleWitness shortest_noncontractible(const EmbeddedGraph& g);
/// Length only (covering-space BFS); returns 0 if none up to `max_length`.
int noncontractible_girth(const EmbeddedGraph& g, const Cocycle& cocycle, int max_length);

/// All simple cycles with min_length <= length <= max_length, each reported
/// once in canonical_cycle form, sorted.
std::vector<Walk> enumerate_cycles(const Graph& g, int min_length, int max_length);

/// Non-contractible cycles of the given exact length, canonical and sorted.
std::vector<Walk> noncontractible_cycles(const EmbeddedGraph& g, const Cocycle& cocycle, int length);

std::vector<int> bfs_distances(const Graph& g, const std::vector<int>& sources);

/// Minimum graph distance between the two cuff walks; 0 if they share a vertex.
int cuff_distance(const EmbeddedGraph& g);

/// For every walk index, 1 if the walk lies on the cuff-1 side of the
/// non-contractible cycle c and 2 otherwise.
std::vector<int> walk_sides(const EmbeddedGraph& g, const Walk& c);

struct Identified {
  EmbeddedGraph graph;
  std::vector<int> old_to_new;
};

/// Identifies the second and fourth corner of the 4-face `face_index`, read
/// starting from position `z1_position` of that face walk. The face collapses
/// and the resulting parallel edges are merged.
Identified identify_across_quad(const EmbeddedGraph& g, int face_index, int z1_position);

/// Cuts a cylinder graph along a path joining the two cuffs; the result is
/// embedded in the disk. to_parent maps each disk vertex to the cut vertex.
Piece cut_along_path(const EmbeddedGraph& g, const std::vector<int>& path);

/// A shortest path between the two cuffs (vertex sequence), or empty if the
/// cuffs share a vertex.
std::vector<int> shortest_cuff_path(const EmbeddedGraph& g);

}  // namespace tfc
