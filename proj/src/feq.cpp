#include "tfc/feq.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "tfc/homotopy.hpp"

namespace tfc {

namespace {

int mod(int a, int k) { return ((a % k) + k) % k; }

void require_equal_quad_cylinder(const EmbeddedGraph& g, const char* op) {
  require_valid(g, op);
  if (g.surface != Surface::Cylinder) throw PreconditionError(std::string(op) + ": not a cylinder graph");
  if (g.cuffs[0].size() != g.cuffs[1].size()) throw PreconditionError(std::string(op) + ": cuff lengths differ");
  if (!is_quadrangulation(g)) throw PreconditionError(std::string(op) + ": internal face of length other than 4");
}

CycleHomomorphism empty_hom(int k, int n) { return CycleHomomorphism{k, std::vector<int>(static_cast<std::size_t>(n), -1)}; }

// Dihedral map x -> sign * x + shift sending `from` onto `to` on every vertex
// of the walk.
struct Dihedral {
  int sign = 1;
  int shift = 0;
  int apply(int x, int k) const { return mod(sign * x + shift, k); }
};

Dihedral align_on(const Walk& walk, const std::vector<int>& from, const std::vector<int>& to, int k) {
  for (int sign : {1, -1}) {
    const int v0 = walk[0];
    const Dihedral d{sign, mod(to[static_cast<std::size_t>(v0)] - sign * from[static_cast<std::size_t>(v0)], k)};
    const bool ok = std::all_of(walk.begin(), walk.end(), [&](int v) {
      return d.apply(from[static_cast<std::size_t>(v)], k) == to[static_cast<std::size_t>(v)];
    });
    if (ok) return d;
  }
  throw Error("build_homomorphisms: pieces disagree on the splitting cycle");
}

// Pulls a piece homomorphism back to parent ids. Entries of `into` that are
// already set must agree.
void lift(const CycleHomomorphism& piece, const std::vector<int>& to_parent, const Dihedral& d,
          std::vector<int>& into) {
  for (std::size_t i = 0; i < to_parent.size(); ++i) {
    const int value = d.apply(piece.residue[i], piece.k);
    int& slot = into[static_cast<std::size_t>(to_parent[i])];
    if (slot != -1 && slot != value) throw Error("build_homomorphisms: lifted maps disagree");
    slot = value;
  }
}

HomomorphismPair solve(const EmbeddedGraph& g, int k);

// Case: a k-cycle strictly between the cuffs splits g into two smaller pieces.
std::optional<HomomorphismPair> split_at_middle_cycle(const EmbeddedGraph& g, int k,
                                                      const std::vector<Walk>& cycles) {
  for (const Walk& middle : cycles) {
    if (same_cycle(middle, g.cuffs[0]) || same_cycle(middle, g.cuffs[1])) continue;
    const Piece p1 = subgraph_between(g, g.cuffs[0], middle);
    const Piece p2 = subgraph_between(g, middle, g.cuffs[1]);
    const HomomorphismPair h1 = solve(p1.graph, k);
    const HomomorphismPair h2 = solve(p2.graph, k);

    const int n = g.vertex_count;
    HomomorphismPair out;
    out.theta = empty_hom(k, n);
    lift(h1.theta, p1.to_parent, Dihedral{}, out.theta.residue);
    std::vector<int> theta2(static_cast<std::size_t>(n), -1);
    lift(h2.theta, p2.to_parent, Dihedral{}, theta2);
    const Dihedral sigma = align_on(middle, theta2, out.theta.residue, k);
    lift(h2.theta, p2.to_parent, sigma, out.theta.residue);

    if (h2.theta_prime) {
      CycleHomomorphism tp = empty_hom(k, n);
      lift(h1.theta, p1.to_parent, Dihedral{}, tp.residue);
      lift(*h2.theta_prime, p2.to_parent, sigma, tp.residue);
      out.theta_prime = std::move(tp);
    } else if (h1.theta_prime) {
      // theta1' is a rotation of theta1 on the middle cycle; shift theta2 to match.
      std::vector<int> prime1(static_cast<std::size_t>(n), -1);
      lift(*h1.theta_prime, p1.to_parent, Dihedral{}, prime1);
      const Dihedral sigma2 = align_on(middle, out.theta.residue, prime1, k);
      CycleHomomorphism tp = empty_hom(k, n);
      lift(*h1.theta_prime, p1.to_parent, Dihedral{}, tp.residue);
      const Dihedral composed{sigma2.sign * sigma.sign, mod(sigma2.sign * sigma.shift + sigma2.shift, k)};
      lift(h2.theta, p2.to_parent, composed, tp.residue);
      out.theta_prime = std::move(tp);
    }
    return out;
  }
  return std::nullopt;
}

bool admissible(const EmbeddedGraph& g, int k) {
  if (homomorphism_precondition_failure(g)) return false;
  return static_cast<int>(g.cuffs[0].size()) == k;
}

// Identifies z2 with z4 in the first admissible 4-face corner accepted by
// `pick(face, z1_position)` and solves the smaller instance.
template <typename Pick>
std::optional<std::pair<Identified, HomomorphismPair>> collapse_face(const EmbeddedGraph& g, int k, Pick pick) {
  for (int f = 0; f < static_cast<int>(g.faces.size()); ++f) {
    for (int p = 0; p < 4; ++p) {
      if (!pick(g.faces[static_cast<std::size_t>(f)], p)) continue;
      Identified id;
      try {
        id = identify_across_quad(g, f, p);
      } catch (const PreconditionError&) {
        continue;
      }
      if (!admissible(id.graph, k)) continue;
      HomomorphismPair h = solve(id.graph, k);
      return std::make_pair(std::move(id), std::move(h));
    }
  }
  return std::nullopt;
}

CycleHomomorphism pull_back(const CycleHomomorphism& h, const std::vector<int>& old_to_new) {
  CycleHomomorphism out{h.k, {}};
  out.residue.reserve(old_to_new.size());
  for (int v : old_to_new) out.residue.push_back(h(v));
  return out;
}

HomomorphismPair prism_maps(const EmbeddedGraph& g, int k) {
  const Walk& c1 = g.cuffs[0];
  const Graph u = underlying_graph(g);
  const std::set<int> on_c1(c1.begin(), c1.end());
  const std::set<int> on_c2(g.cuffs[1].begin(), g.cuffs[1].end());
  std::vector<int> partner;
  for (int v : c1) {
    int other = -1;
    for (int w : u.adjacency[static_cast<std::size_t>(v)]) {
      if (!on_c1.contains(w)) other = w;
    }
    if (other == -1 || !on_c2.contains(other)) throw Error("build_homomorphisms: degree-3 cuff is not a prism side");
    partner.push_back(other);
  }
  if (g.vertex_count != 2 * k || std::set<int>(partner.begin(), partner.end()).size() != static_cast<std::size_t>(k)) {
    throw Error("build_homomorphisms: degree-3 cuff is not a prism side");
  }
  HomomorphismPair out;
  out.theta = empty_hom(k, g.vertex_count);
  CycleHomomorphism prime = empty_hom(k, g.vertex_count);
  for (int i = 0; i < k; ++i) {
    const auto vi = static_cast<std::size_t>(c1[static_cast<std::size_t>(i)]);
    const auto ui = static_cast<std::size_t>(partner[static_cast<std::size_t>(i)]);
    out.theta.residue[vi] = i;
    prime.residue[vi] = i;
    out.theta.residue[ui] = mod(i + 1, k);
    prime.residue[ui] = mod(i - 1, k);
  }
  out.theta_prime = std::move(prime);
  return out;
}

HomomorphismPair solve(const EmbeddedGraph& g, int k) {
  const Cocycle cocycle = build_cocycle(g);
  const std::vector<Walk> cycles = noncontractible_cycles(g, cocycle, k);

  if (auto split = split_at_middle_cycle(g, k, cycles)) return *split;

  const Walk& c1 = g.cuffs[0];
  const Walk& c2 = g.cuffs[1];
  if (same_cycle(c1, c2) && g.vertex_count == k) {
    HomomorphismPair out;
    out.theta = empty_hom(k, k);
    for (int i = 0; i < k; ++i) out.theta.residue[static_cast<std::size_t>(c1[static_cast<std::size_t>(i)])] = i;
    return out;
  }

  const std::set<int> on_c1(c1.begin(), c1.end());
  const std::set<int> on_c2(c2.begin(), c2.end());
  const bool cuffs_meet = std::any_of(c1.begin(), c1.end(), [&](int v) { return on_c2.contains(v); });
  if (cuffs_meet) {
    auto collapsed = collapse_face(g, k, [&](const Walk& f, int p) {
      return on_c1.contains(f[static_cast<std::size_t>(p)]) && on_c2.contains(f[static_cast<std::size_t>(p)]);
    });
    if (!collapsed) throw Error("build_homomorphisms: no admissible face at a shared cuff vertex");
    HomomorphismPair out;
    out.theta = pull_back(collapsed->second.theta, collapsed->first.old_to_new);
    return out;
  }

  const Graph u = underlying_graph(g);
  const bool all_degree_three = std::all_of(c1.begin(), c1.end(), [&](int v) { return u.degree(v) == 3; });
  if (all_degree_three) return prism_maps(g, k);

  auto collapsed = collapse_face(g, k, [&](const Walk& f, int p) {
    const int z1 = f[static_cast<std::size_t>(p)];
    return on_c1.contains(z1) && u.degree(z1) >= 4 && !on_c1.contains(f[static_cast<std::size_t>((p + 1) % 4)]) &&
           !on_c1.contains(f[static_cast<std::size_t>((p + 3) % 4)]);
  });
  if (!collapsed) throw Error("build_homomorphisms: no admissible face at a high-degree cuff vertex");
  const auto& [id, h] = *collapsed;
  HomomorphismPair out;
  out.theta = pull_back(h.theta, id.old_to_new);
  if (h.theta_prime) out.theta_prime = pull_back(*h.theta_prime, id.old_to_new);
  return out;
}

}  // namespace

const char* to_string(FeqReason r) {
  switch (r) {
    case FeqReason::ShortCycle: return "short-cycle";
    case FeqReason::NoChain: return "no-chain";
  }
  return "?";
}

FeqResult is_feq(const EmbeddedGraph& g) {
  require_equal_quad_cylinder(g, "is_feq");
  const int k = static_cast<int>(g.cuffs[0].size());
  const Cocycle cocycle = build_cocycle(g);
  FeqResult result;
  if (noncontractible_girth(g, cocycle, k - 1) != 0) {
    result.reason = FeqReason::ShortCycle;
    return result;
  }
  std::vector<Walk> cycles = noncontractible_cycles(g, cocycle, k);
  auto index_of = [&](const Walk& w) {
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (same_cycle(cycles[i], w)) return static_cast<int>(i);
    }
    throw Error("is_feq: cuff missing from the non-contractible k-cycles");
  };
  const int source = index_of(g.cuffs[0]);
  const int target = index_of(g.cuffs[1]);

  std::map<int, std::vector<int>> cycles_at;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (int v : cycles[i]) cycles_at[v].push_back(static_cast<int>(i));
  }
  std::vector<int> parent(cycles.size(), -2);
  std::deque<int> queue{source};
  parent[static_cast<std::size_t>(source)] = -1;
  while (!queue.empty() && parent[static_cast<std::size_t>(target)] == -2) {
    const int i = queue.front();
    queue.pop_front();
    std::set<int> next;
    for (int v : cycles[static_cast<std::size_t>(i)]) next.insert(cycles_at[v].begin(), cycles_at[v].end());
    for (int j : next) {
      if (parent[static_cast<std::size_t>(j)] != -2) continue;
      parent[static_cast<std::size_t>(j)] = i;
      queue.push_back(j);
    }
  }
  if (parent[static_cast<std::size_t>(target)] == -2) {
    result.reason = FeqReason::NoChain;
    return result;
  }
  FeqWitness w{k, {}};
  for (int i = target; i != -1; i = parent[static_cast<std::size_t>(i)]) w.chain.push_back(cycles[static_cast<std::size_t>(i)]);
  std::reverse(w.chain.begin(), w.chain.end());
  w.chain.front() = g.cuffs[0];
  if (w.chain.size() > 1) w.chain.back() = g.cuffs[1];
  result.witness = std::move(w);
  return result;
}

bool is_wide_feq(const EmbeddedGraph& g) {
  if (!is_feq(g)) return false;
  return cuff_distance(g) >= 4 * static_cast<int>(g.cuffs[0].size());
}

std::optional<std::string> homomorphism_precondition_failure(const EmbeddedGraph& g) {
  const auto problems = validate(g);
  if (!problems.empty()) return "invalid embedding: " + problems.front().what;
  if (g.surface != Surface::Cylinder) return std::string("not a cylinder graph");
  if (g.cuffs[0].size() != g.cuffs[1].size()) return std::string("cuff lengths differ");
  if (!is_quadrangulation(g)) return std::string("internal face of length other than 4");
  const int k = static_cast<int>(g.cuffs[0].size());
  if (noncontractible_girth(g, build_cocycle(g), k - 1) != 0) {
    return std::string("non-contractible cycle shorter than the cuffs");
  }
  return std::nullopt;
}

HomomorphismPair build_homomorphisms(const EmbeddedGraph& g) {
  if (auto why = homomorphism_precondition_failure(g)) throw PreconditionError("build_homomorphisms: " + *why);
  const int k = static_cast<int>(g.cuffs[0].size());
  HomomorphismPair out = solve(g, k);
  if (!verify_homomorphism(g, out.theta)) throw Error("build_homomorphisms: internal error, theta is not cyclic");
  if (out.theta_prime) {
    const HomCheck check{false, &out.theta, &out.theta};
    if (!verify_homomorphism(g, *out.theta_prime, check)) {
      throw Error("build_homomorphisms: internal error, theta' is not offset by two");
    }
  }
  return out;
}

bool is_cycle_homomorphism(const EmbeddedGraph& g, const CycleHomomorphism& h) {
  if (h.k < 3 || static_cast<int>(h.residue.size()) != g.vertex_count) return false;
  if (std::any_of(h.residue.begin(), h.residue.end(), [&](int r) { return r < 0 || r >= h.k; })) return false;
  return std::all_of(g.edges.begin(), g.edges.end(), [&](const Edge& e) {
    const int d = mod(h(e.first) - h(e.second), h.k);
    return d == 1 || d == h.k - 1;
  });
}

bool is_cyclic_on(const CycleHomomorphism& h, const Walk& walk) {
  if (static_cast<int>(walk.size()) != h.k) return false;
  std::set<int> seen;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    seen.insert(h(walk[i]));
    const int d = mod(h(walk[(i + 1) % walk.size()]) - h(walk[i]), h.k);
    if (d != 1 && d != h.k - 1) return false;
  }
  return static_cast<int>(seen.size()) == h.k;
}

bool offset_by_two(const CycleHomomorphism& a, const CycleHomomorphism& b, const Walk& walk) {
  if (a.k != b.k) return false;
  const int k = a.k;
  return std::all_of(walk.begin(), walk.end(), [&](int v) {
    const int d = mod(b(v) - a(v), k);
    return d != 0 && (d == mod(2, k) || d == mod(-2, k));
  });
}

bool verify_homomorphism(const EmbeddedGraph& g, const CycleHomomorphism& h, const HomCheck& check) {
  if (!is_cycle_homomorphism(g, h)) return false;
  if (check.cyclic_on_cuffs) {
    for (const Walk& c : g.cuffs) {
      if (!is_cyclic_on(h, c)) return false;
    }
  }
  if (check.agrees_on_cuff1) {
    for (int v : g.cuffs.at(0)) {
      if (h(v) != (*check.agrees_on_cuff1)(v)) return false;
    }
  }
  if (check.offset_on_cuff2 && !offset_by_two(*check.offset_on_cuff2, h, g.cuffs.at(1))) return false;
  return true;
}

EmbeddedGraph swap_cuffs(const EmbeddedGraph& g) {
  if (g.cuffs.size() != 2) throw PreconditionError("swap_cuffs: not a cylinder graph");
  EmbeddedGraph out = g;
  std::swap(out.cuffs[0], out.cuffs[1]);
  return out;
}

}  // namespace tfc
