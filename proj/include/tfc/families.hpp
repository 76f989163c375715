#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tfc/embedding.hpp"

namespace tfc {

/// A Thomas-Walls type graph with its distinguished 4-cycles. Each interface
/// cycle is stored as [u1, u2, u3, u4] with u1 < u3 and the interface pair
/// u1u3.
struct ThomasWalls {
  EmbeddedGraph embedding;
  std::vector<Walk> interface_cycles;
  std::vector<Edge> interface_pairs;
};

/// T_1 = K4; T_{n+1} replaces the smallest edge uv lying in two triangles by
/// new vertices x, y, z (x~u, y~v, z~v, and the triangle xyz). The result is
/// planar and is returned as a disk graph whose cuff is its least face.
ThomasWalls gen_thomas_walls(int n);

/// T_n minus its interface pairs. For n >= 3 a cylinder graph whose cuffs
/// are the two interface cycles; for n = 2 a disk graph whose cuff is the
/// first interface cycle.
ThomasWalls gen_reduced_tw(int n);

/// Disk quadrangulation with a chordless 6-cycle as cuff. `rings` hexagons
/// are nested inside the cuff; the innermost one is closed off by a hub
/// joined to its odd positions.
EmbeddedGraph gen_patch(int rings = 0);

/// Why p is not a patch, if it is not.
std::optional<std::string> patch_violation(const EmbeddedGraph& p);

/// Replaces every vertex v of S (independent, degree 3) by a 6-cycle
/// alternating between the neighbours of v and new vertices, filled with
/// patches[i]. v's id is reused for the first new ring vertex.
EmbeddedGraph apply_patching(const EmbeddedGraph& g, const std::vector<int>& s, const std::vector<EmbeddedGraph>& patches);

/// Interior degree-3 vertices of g taken greedily in increasing order while
/// they stay independent.
std::vector<int> greedy_patching_set(const EmbeddedGraph& g);

/// Patched reduced Thomas-Walls graph; `s` empty means no patching.
ThomasWalls gen_patched_tw(int n, const std::vector<int>& s, int rings = 0);

struct FrameSide {
  bool new_y = true;
  bool new_w = true;
};

/// Adds a new cuff x y' z w' over each cuff x y z w, where xz is the given
/// interface pair of that side.
EmbeddedGraph apply_framing(const EmbeddedGraph& g, const std::array<Edge, 2>& pairs, const std::array<FrameSide, 2>& sides);

/// C_k x P_m; vertex (level j, index i) has id j*k + i.
EmbeddedGraph gen_cylinder_grid(int k, int m);

/// The 5-vertex forced triangle gadget glued t times.
EmbeddedGraph gen_feq_chain(int t);
EmbeddedGraph feq_gadget();

/// Identifies cuff 2 of a with cuff 1 of b (reversed, offset by `shift`).
EmbeddedGraph glue(const EmbeddedGraph& a, const EmbeddedGraph& b, int shift = 0);

/// C_3 x P_m with the cuff edges at the given positions subdivided.
EmbeddedGraph gen_near_33_quadrangulation(int m, std::optional<int> subdivide_cuff1, std::optional<int> subdivide_cuff2);

/// Grows a k-cycle by repeatedly replacing one vertex through a new 4-face;
/// consecutive cycles share k-1 vertices.
EmbeddedGraph gen_flip_chain(int k, int rounds);

/// Grid with the first 4-face next to cuff 1 split along its diagonal.
EmbeddedGraph gen_split_grid(int k, int m);

/// Quadrangulated annulus between an (L+2)-cycle (cuff 1) and an L-cycle.
EmbeddedGraph gen_taper(int inner);

/// Cuffs of length inner + 2*steps narrowing to C_inner x P_m in the middle.
EmbeddedGraph gen_tapered(int inner, int steps, int m);

/// Gadget chains of lengths t1 and t2 glued onto both ends of C_3 x P_m.
EmbeddedGraph gen_capped_grid(int t1, int m, int t2);

/// Named family plus string parameters, as used by the CLI and corpus files.
struct GenSpec {
  std::string name;
  std::string family;
  std::map<std::string, std::string> params;
};

std::vector<std::string> family_names();

/// Builds the graph described by spec; unknown families or missing or
/// malformed parameters raise Error.
EmbeddedGraph generate(const GenSpec& spec);

/// "k=v k=v" in key order.
std::string format_params(const std::map<std::string, std::string>& params);

}  // namespace tfc
