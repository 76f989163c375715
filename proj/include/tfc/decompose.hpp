#pragma once

#include <optional>
#include <vector>

#include "tfc/embedding.hpp"

namespace tfc {

enum class PieceLabel {
  ShorterCuffs,   // (i)   both piece cuffs shorter than k
  LargerEll,      // (ii)  ell(piece) > ell(g)
  EllAboveK,      // (iii) ell(piece) = k + 1
  NonForcedSides, // (iv)  middle k-cycle with neither side forced
  Forced,         // (v)   piece is a forced extension quadrangulation
};

/// Roman numeral used in CLI output: "i" .. "v".
const char* to_string(PieceLabel label);

/// Nested non-contractible cycles K_1 = cuff 1, ..., K_n = cuff 2 and one
/// label per piece between consecutive cycles.
struct Decomposition {
  std::vector<Walk> cycles;
  std::vector<PieceLabel> labels;
  std::vector<std::optional<Walk>> middle;  // K' for NonForcedSides pieces
  std::vector<bool> narrow;                 // piece cuffs closer than 4k
};

/// min(shortest non-contractible cycle other than the cuffs, k + 1), where k
/// is the longer cuff length.
int ell(const EmbeddedGraph& g);

/// Requires a cylinder quadrangulation with vertex-disjoint cuffs and
/// |C1| <= |C2|.
Decomposition decompose(const EmbeddedGraph& g);

/// Re-derives nesting and every label predicate from scratch.
bool verify_decomposition(const EmbeddedGraph& g, const Decomposition& d);

}  // namespace tfc
