#include "tfc/winding.hpp"

#include <string>

namespace tfc {

int delta_step(Color a, Color b) {
  if (a == 0 || b == 0) throw PreconditionError("delta_step: unassigned color");
  if (a > 3 || b > 3) throw PreconditionError("delta_step: color out of range");
  if (a == b) throw PreconditionError("delta_step: equal colors on an edge");
  const int diff = static_cast<int>(b) - static_cast<int>(a);
  return diff == 1 || diff == -2 ? 1 : -1;
}

int delta(const Coloring& coloring, const Walk& walk) {
  int total = 0;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const int u = walk[i];
    const int v = walk[(i + 1) % walk.size()];
    if (!coloring.assigned(u) || !coloring.assigned(v)) {
      throw PreconditionError("winding: vertex " + std::to_string(coloring.assigned(u) ? v : u) + " is uncolored");
    }
    if (coloring[u] == coloring[v]) {
      throw PreconditionError("winding: improper edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    total += delta_step(coloring[u], coloring[v]);
  }
  return total;
}

int winding_number(const Coloring& coloring, const Walk& walk) {
  const int d = delta(coloring, walk);
  // A closed walk returns to its starting color, so the net turn is a multiple of 3.
  if (d % 3 != 0) throw Error("winding_number: delta of a closed walk is not divisible by 3");
  return d / 3;
}

bool winding_constraint_satisfied(const EmbeddedGraph& g, const Coloring& coloring) {
  int sum = 0;
  for (const Walk& cuff : g.cuffs) sum += winding_number(coloring, cuff);
  return sum == 0;
}

WindingReport full_coloring_winding_audit(const EmbeddedGraph& g, const Coloring& coloring) {
  WindingReport report;
  for (int w = 0; w < g.walk_count(); ++w) {
    const int d = delta(coloring, g.walk(w));
    if (d % 3 != 0) throw Error("winding audit: delta not divisible by 3");
    report.delta.push_back(d);
    report.omega.push_back(d / 3);
    report.total += d / 3;
  }
  report.constraint_satisfied = winding_constraint_satisfied(g, coloring);
  return report;
}

}  // namespace tfc
