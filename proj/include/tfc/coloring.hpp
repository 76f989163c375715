#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfc/embedding.hpp"

namespace tfc {

enum class Decision { Extends, Fails };
enum class Criterion { WindingConstraint, ThetaIdentification, NoExtension };

const char* to_string(Criterion c);

struct ExtensionVerdict {
  Decision decision = Decision::Fails;
  std::optional<Coloring> witness;     // total and proper when Extends
  std::optional<Criterion> violated;   // set when Fails
  std::string route;                   // which rule produced the answer

  bool extends() const { return decision == Decision::Extends; }
};

/// Size guards for exponential procedures.
struct Budget {
  int decision_vertices = 64;     // oracle_extend
  int enumeration_vertices = 20;  // criticality checks
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Exact backtracking 3-coloring. Vertices are chosen smallest domain
/// first, lowest id on ties, colors in increasing order, so the witness is
/// a deterministic function of the input.
ExtensionVerdict oracle_extend(const Graph& g, const Coloring& precoloring, const Budget& budget = {});
ExtensionVerdict oracle_extend(const EmbeddedGraph& g, const Coloring& precoloring, const Budget& budget = {});

bool is_three_colorable(const Graph& g, const Budget& budget = {});

/// Every coloring of the cuff vertices that is proper on the cuff cycles
/// (edges between different cuffs are not checked), with only cuff vertices
/// assigned, in lexicographic order of the cuff vertices sorted by id.
std::vector<Coloring> proper_cuff_colorings(const EmbeddedGraph& g);

/// Decision for wide forced extension quadrangulations.
ExtensionVerdict decide_wide_feq(const EmbeddedGraph& g, const Coloring& psi, const Budget& budget = {});

/// Decision for cylinder quadrangulations with far-apart cuffs (equal cuffs
/// at distance >= 4k with no shorter non-contractible cycle, or all other
/// non-contractible cycles longer than both cuffs at distance >= |C1|+|C2|).
ExtensionVerdict decide_far_quadrangulation(const EmbeddedGraph& g, const Coloring& psi, const Budget& budget = {});

/// Which of the far regimes g satisfies; the string explains the failure.
struct FarRegime {
  bool equal_cuffs = false;    // distance >= 4k, girth >= k
  bool long_middle = false;    // other non-contractible cycles longer than the cuffs
  std::string why_not;
};
FarRegime far_regime(const EmbeddedGraph& g);

/// Builds an extension of psi through the homomorphisms of the two halves of g
/// cut at `middle`. Both halves must be non-forced.
ExtensionVerdict construct_extension_nonfeq(const EmbeddedGraph& g, const Walk& middle, const Coloring& psi);

/// First middle k-cycle whose halves are both non-forced, if any.
std::optional<Walk> nonfeq_splitting_cycle(const EmbeddedGraph& g);

/// Removing any edge outside the cuffs (or any isolated non-cuff vertex)
/// enlarges the set of extendable cuff precolorings.
bool is_critical(const EmbeddedGraph& g, const Budget& budget = {});

/// Not 3-colorable, but every single-edge deletion is; no isolated vertices.
bool is_4_critical(const Graph& g, const Budget& budget = {});

/// Parses "v:c,v:c,..." into a coloring of n vertices.
Coloring parse_precoloring(const std::string& text, int vertex_count);

}  // namespace tfc
