#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfc/embedding.hpp"

namespace tfc {

/// Map from the vertices of a graph to positions 0..k-1 of a reference
/// k-cycle.
struct CycleHomomorphism {
  int k = 0;
  std::vector<int> residue;

  int operator()(int v) const { return residue[static_cast<std::size_t>(v)]; }
  friend bool operator==(const CycleHomomorphism&, const CycleHomomorphism&) = default;
};

/// Chain of non-contractible k-cycles from cuff 1 to cuff 2 in which
/// consecutive cycles share a vertex.
struct FeqWitness {
  int k = 0;
  std::vector<Walk> chain;
};

enum class FeqReason { ShortCycle, NoChain };

struct FeqResult {
  std::optional<FeqWitness> witness;
  FeqReason reason = FeqReason::NoChain;  // meaningful only without a witness

  explicit operator bool() const { return witness.has_value(); }
};

const char* to_string(FeqReason r);

/// Recognizes forced extension quadrangulations. Requires equal cuff lengths
/// and 4-faces only (PreconditionError otherwise).
FeqResult is_feq(const EmbeddedGraph& g);

/// FEQ whose cuffs are at distance at least 4k. False for non-FEQs.
bool is_wide_feq(const EmbeddedGraph& g);

/// Why g is outside the domain of build_homomorphisms, if it is.
std::optional<std::string> homomorphism_precondition_failure(const EmbeddedGraph& g);

struct HomomorphismPair {
  CycleHomomorphism theta;
  std::optional<CycleHomomorphism> theta_prime;
};

/// Homomorphism to the k-cycle that is cyclic on both cuffs and, when g is
/// not forced, a second one agreeing on cuff 1 and offset by 2 on cuff 2.
/// Built by recursion: split at a middle k-cycle, collapse a 4-face at a
/// shared cuff vertex, use the explicit prism maps, or collapse a 4-face at a
/// cuff vertex of degree at least 4.
HomomorphismPair build_homomorphisms(const EmbeddedGraph& g);

bool is_cycle_homomorphism(const EmbeddedGraph& g, const CycleHomomorphism& h);
/// Restriction to the walk is an isomorphism onto the reference cycle.
bool is_cyclic_on(const CycleHomomorphism& h, const Walk& walk);
/// Every vertex of the walk is moved by +-2 (mod k).
bool offset_by_two(const CycleHomomorphism& a, const CycleHomomorphism& b, const Walk& walk);

struct HomCheck {
  bool cyclic_on_cuffs = true;
  const CycleHomomorphism* agrees_on_cuff1 = nullptr;
  const CycleHomomorphism* offset_on_cuff2 = nullptr;
};

bool verify_homomorphism(const EmbeddedGraph& g, const CycleHomomorphism& h, const HomCheck& check = {});

/// Same embedding with the two cuffs exchanged.
EmbeddedGraph swap_cuffs(const EmbeddedGraph& g);

}  // namespace tfc
