#pragma once

#include <vector>

#include "tfc/embedding.hpp"

namespace tfc {

/// +1 if b - a is 1 or -2, otherwise -1. Throws if a == b or either is unassigned.
int delta_step(Color a, Color b);

/// Sum of delta_step over the closed walk.
int delta(const Coloring& coloring, const Walk& walk);

/// delta / 3; the walk must be closed and properly colored.
int winding_number(const Coloring& coloring, const Walk& walk);

/// Disk: the cuff has winding 0. Cylinder: the cuff windings (in their
/// stored, consistent orientation) sum to 0. Only cuff vertices are read.
bool winding_constraint_satisfied(const EmbeddedGraph& g, const Coloring& coloring);

struct WindingReport {
  std::vector<int> delta;  // per walk index (faces, then cuffs)
  std::vector<int> omega;
  int total = 0;
  bool constraint_satisfied = false;
};

WindingReport full_coloring_winding_audit(const EmbeddedGraph& g, const Coloring& coloring);

}  // namespace tfc
