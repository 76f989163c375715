#include "tfc/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "tfc/feq.hpp"
#include "tfc/homotopy.hpp"
#include "tfc/winding.hpp"

namespace tfc {

namespace {

constexpr std::uint8_t kAll = 0b111;
constexpr std::size_t kMaxCachedFailures = 1u << 21;

std::uint8_t bit(Color c) { return static_cast<std::uint8_t>(1u << (c - 1)); }

// Backtracking with forward checking. Failed residual states are cached: once
// every assigned vertex is reflected in its neighbours' domains, the residual
// problem depends only on the domains of the unassigned vertices.
class Solver {
 public:
  explicit Solver(const Graph& g) : g_(g), domain_(static_cast<std::size_t>(g.vertex_count), kAll),
                                    color_(static_cast<std::size_t>(g.vertex_count), 0) {}

  bool preassign(int v, Color c) {
    if (!(domain_[idx(v)] & bit(c))) return false;
    return assign(v, c, nullptr);
  }

  bool solve() { return search(); }

  Coloring result() const { return Coloring(color_); }

 private:
  struct Change {
    int vertex;
    std::uint8_t old_domain;
  };

  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

  bool assign(int v, Color c, std::vector<Change>* trail) {
    color_[idx(v)] = c;
    if (trail) trail->push_back({v, domain_[idx(v)]});
    domain_[idx(v)] = bit(c);
    bool ok = true;
    for (int w : g_.adjacency[idx(v)]) {
      if (color_[idx(w)] != 0) {
        if (color_[idx(w)] == c) ok = false;
        continue;
      }
      if (domain_[idx(w)] & bit(c)) {
        if (trail) trail->push_back({w, domain_[idx(w)]});
        domain_[idx(w)] = static_cast<std::uint8_t>(domain_[idx(w)] & ~bit(c));
        if (domain_[idx(w)] == 0) ok = false;
      }
    }
    return ok;
  }

  std::string state_key() const {
    std::string key(color_.size(), '\0');
    for (std::size_t v = 0; v < color_.size(); ++v) {
      if (color_[v] == 0) key[v] = static_cast<char>(domain_[v]);
    }
    return key;
  }

  bool search() {
    int best = -1;
    int best_size = 4;
    for (int v = 0; v < g_.vertex_count; ++v) {
      if (color_[idx(v)] != 0) continue;
      const int size = std::popcount(domain_[idx(v)]);
      if (size < best_size) {
        best = v;
        best_size = size;
      }
    }
    if (best == -1) return true;
    std::string key = state_key();
    if (failed_.contains(key)) return false;
    for (Color c = 1; c <= 3; ++c) {
      if (!(domain_[idx(best)] & bit(c))) continue;
      std::vector<Change> trail;
      const bool ok = assign(best, c, &trail);
      if (ok && search()) return true;
      color_[idx(best)] = 0;
      for (auto it = trail.rbegin(); it != trail.rend(); ++it) domain_[idx(it->vertex)] = it->old_domain;
    }
    if (failed_.size() < kMaxCachedFailures) failed_.insert(std::move(key));
    return false;
  }

  const Graph& g_;
  std::vector<std::uint8_t> domain_;
  std::vector<Color> color_;
  std::unordered_set<std::string> failed_;
};

ExtensionVerdict fails(Criterion c, std::string route) {
  ExtensionVerdict v;
  v.decision = Decision::Fails;
  v.violated = c;
  v.route = std::move(route);
  return v;
}

ExtensionVerdict extends(Coloring witness, std::string route) {
  ExtensionVerdict v;
  v.decision = Decision::Extends;
  v.witness = std::move(witness);
  v.route = std::move(route);
  return v;
}

void require_cuffs_colored(const EmbeddedGraph& g, const Coloring& psi, const char* op) {
  if (psi.size() != g.vertex_count) throw PreconditionError(std::string(op) + ": precoloring has wrong size");
  const Graph u = underlying_graph(g);
  for (const Walk& c : g.cuffs) {
    for (int v : c) {
      if (!psi.assigned(v)) throw PreconditionError(std::string(op) + ": cuff vertex " + std::to_string(v) + " is uncolored");
    }
  }
  for (const Walk& c : g.cuffs) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (psi[c[i]] == psi[c[(i + 1) % c.size()]]) throw PreconditionError(std::string(op) + ": precoloring is not proper");
    }
  }
  if (!is_proper(u, psi)) throw PreconditionError(std::string(op) + ": precoloring is not proper");
}

int cuff_length(const EmbeddedGraph& g, int i) { return static_cast<int>(g.cuffs[static_cast<std::size_t>(i)].size()); }

bool k_third_winding(const EmbeddedGraph& g, const Coloring& psi) {
  const int k = cuff_length(g, 0);
  return k % 3 == 0 && std::abs(winding_number(psi, g.cuffs[0])) == k / 3;
}

ExtensionVerdict oracle_witness(const EmbeddedGraph& g, const Coloring& psi, const Budget& budget,
                                const std::string& route) {
  ExtensionVerdict v = oracle_extend(g, psi, budget);
  if (!v.extends()) throw Error("decision rule predicts an extension but the oracle finds none (" + route + ")");
  v.route = route;
  return v;
}

// Coloring obtained by transporting the cuff-1 colors of psi along h.
std::optional<Coloring> pull_back(const EmbeddedGraph& g, const CycleHomomorphism& h, const Coloring& psi) {
  std::vector<Color> by_residue(static_cast<std::size_t>(h.k), 0);
  for (int v : g.cuffs[0]) {
    Color& slot = by_residue[static_cast<std::size_t>(h(v))];
    if (slot != 0 && slot != psi[v]) return std::nullopt;
    slot = psi[v];
  }
  if (std::count(by_residue.begin(), by_residue.end(), Color{0}) != 0) return std::nullopt;
  Coloring phi(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) phi.set(v, by_residue[static_cast<std::size_t>(h(v))]);
  for (int v : g.cuffs[1]) {
    if (phi[v] != psi[v]) return std::nullopt;
  }
  if (!is_proper(underlying_graph(g), phi)) return std::nullopt;
  return phi;
}

}  // namespace

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::WindingConstraint: return "winding-constraint";
    case Criterion::ThetaIdentification: return "theta-identification";
    case Criterion::NoExtension: return "no-extension";
  }
  return "?";
}

ExtensionVerdict oracle_extend(const Graph& g, const Coloring& precoloring, const Budget& budget) {
  if (g.vertex_count > budget.decision_vertices) {
    throw BudgetExceeded("oracle_extend: " + std::to_string(g.vertex_count) + " vertices exceed the budget of " +
                         std::to_string(budget.decision_vertices));
  }
  if (precoloring.size() != g.vertex_count) throw PreconditionError("oracle_extend: precoloring has wrong size");
  Solver solver(g);
  for (int v = 0; v < g.vertex_count; ++v) {
    if (!precoloring.assigned(v)) continue;
    if (precoloring[v] > 3) throw PreconditionError("oracle_extend: color out of range");
    if (!solver.preassign(v, precoloring[v])) return fails(Criterion::NoExtension, "oracle");
  }
  if (!solver.solve()) return fails(Criterion::NoExtension, "oracle");
  return extends(solver.result(), "oracle");
}

ExtensionVerdict oracle_extend(const EmbeddedGraph& g, const Coloring& precoloring, const Budget& budget) {
  return oracle_extend(underlying_graph(g), precoloring, budget);
}

bool is_three_colorable(const Graph& g, const Budget& budget) {
  return oracle_extend(g, Coloring(g.vertex_count), budget).extends();
}

std::vector<Coloring> proper_cuff_colorings(const EmbeddedGraph& g) {
  std::set<int> on_cuffs;
  for (const Walk& c : g.cuffs) on_cuffs.insert(c.begin(), c.end());
  const std::vector<int> order(on_cuffs.begin(), on_cuffs.end());
  std::vector<Edge> cycle_edges;
  for (const Walk& c : g.cuffs) {
    for (const Edge& e : walk_edges(c)) cycle_edges.push_back(e);
  }
  const Graph u = Graph::from_edges(g.vertex_count, cycle_edges);
  std::vector<Coloring> out;
  Coloring current(g.vertex_count);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == order.size()) {
      out.push_back(current);
      return;
    }
    const int v = order[i];
    for (Color c = 1; c <= 3; ++c) {
      const auto& adj = u.adjacency[static_cast<std::size_t>(v)];
      if (std::any_of(adj.begin(), adj.end(), [&](int w) { return current[w] == c; })) continue;
      current.set(v, c);
      self(self, i + 1);
      current.clear(v);
    }
  };
  rec(rec, 0);
  return out;
}

ExtensionVerdict decide_wide_feq(const EmbeddedGraph& g, const Coloring& psi, const Budget& budget) {
  if (!is_wide_feq(g)) throw PreconditionError("decide_wide_feq: graph is not a wide forced extension quadrangulation");
  require_cuffs_colored(g, psi, "decide_wide_feq");
  if (!winding_constraint_satisfied(g, psi)) return fails(Criterion::WindingConstraint, "winding");
  if (!k_third_winding(g, psi)) return oracle_witness(g, psi, budget, "winding");

  const CycleHomomorphism theta = build_homomorphisms(g).theta;
  std::map<int, Color> color_of_class;
  for (const Walk& c : g.cuffs) {
    for (int v : c) {
      auto [it, inserted] = color_of_class.emplace(theta(v), psi[v]);
      if (!inserted && it->second != psi[v]) return fails(Criterion::ThetaIdentification, "theta");
    }
  }
  auto phi = pull_back(g, theta, psi);
  if (!phi) throw Error("decide_wide_feq: theta pullback is not a proper extension");
  return extends(std::move(*phi), "theta");
}

FarRegime far_regime(const EmbeddedGraph& g) {
  FarRegime r;
  require_valid(g, "far_regime");
  if (g.surface != Surface::Cylinder) {
    r.why_not = "not a cylinder graph";
    return r;
  }
  if (!is_quadrangulation(g)) {
    r.why_not = "internal face of length other than 4";
    return r;
  }
  const int k1 = cuff_length(g, 0);
  const int k2 = cuff_length(g, 1);
  const int distance = cuff_distance(g);
  const Cocycle cocycle = build_cocycle(g);

  std::vector<std::string> reasons;
  if (k1 == k2) {
    const bool girth_ok = noncontractible_girth(g, cocycle, k1 - 1) == 0;
    r.equal_cuffs = girth_ok && distance >= 4 * k1;
    if (!girth_ok) reasons.push_back("non-contractible cycle shorter than the cuffs");
    if (distance < 4 * k1) {
      reasons.push_back("cuff distance " + std::to_string(distance) + " < " + std::to_string(4 * k1));
    }
  } else {
    reasons.push_back("cuff lengths differ");
  }

  bool middle_long = true;
  for (int len = 3; len <= std::max(k1, k2) && middle_long; ++len) {
    for (const Walk& c : noncontractible_cycles(g, cocycle, len)) {
      if (!same_cycle(c, g.cuffs[0]) && !same_cycle(c, g.cuffs[1])) {
        middle_long = false;
        break;
      }
    }
  }
  r.long_middle = middle_long && distance >= k1 + k2;
  if (!middle_long) reasons.push_back("a non-cuff non-contractible cycle is not longer than the cuffs");
  if (distance < k1 + k2) {
    reasons.push_back("cuff distance " + std::to_string(distance) + " < " + std::to_string(k1 + k2));
  }
  if (!r.equal_cuffs && !r.long_middle) {
    std::ostringstream os;
    for (std::size_t i = 0; i < reasons.size(); ++i) os << (i ? "; " : "") << reasons[i];
    r.why_not = os.str();
  }
  return r;
}

std::optional<Walk> nonfeq_splitting_cycle(const EmbeddedGraph& g) {
  const int k = cuff_length(g, 0);
  for (const Walk& middle : noncontractible_cycles(g, build_cocycle(g), k)) {
    if (same_cycle(middle, g.cuffs[0]) || same_cycle(middle, g.cuffs[1])) continue;
    const Piece p1 = subgraph_between(g, g.cuffs[0], middle);
    const Piece p2 = subgraph_between(g, middle, g.cuffs[1]);
    if (!is_feq(p1.graph) && !is_feq(p2.graph)) return middle;
  }
  return std::nullopt;
}

ExtensionVerdict decide_far_quadrangulation(const EmbeddedGraph& g, const Coloring& psi, const Budget& budget) {
  const FarRegime regime = far_regime(g);
  if (!regime.equal_cuffs && !regime.long_middle) {
    throw PreconditionError("decide_far_quadrangulation: " + regime.why_not);
  }
  require_cuffs_colored(g, psi, "decide_far_quadrangulation");
  if (!winding_constraint_satisfied(g, psi)) return fails(Criterion::WindingConstraint, "winding");
  if (!regime.equal_cuffs || !k_third_winding(g, psi)) return oracle_witness(g, psi, budget, "winding");

  if (is_feq(g)) {
    ExtensionVerdict v = decide_wide_feq(g, psi, budget);
    v.route = "wide-feq:" + v.route;
    return v;
  }
  if (auto middle = nonfeq_splitting_cycle(g)) return construct_extension_nonfeq(g, *middle, psi);
  ExtensionVerdict v = oracle_extend(g, psi, budget);
  v.route = "oracle";
  return v;
}

ExtensionVerdict construct_extension_nonfeq(const EmbeddedGraph& g, const Walk& middle, const Coloring& psi) {
  const char* op = "construct_extension_nonfeq";
  if (auto why = homomorphism_precondition_failure(g)) throw PreconditionError(std::string(op) + ": " + *why);
  const int k = cuff_length(g, 0);
  if (cuff_distance(g) < 4 * k) throw PreconditionError(std::string(op) + ": cuff distance below 4k");
  if (static_cast<int>(middle.size()) != k || is_contractible(build_cocycle(g), middle)) {
    throw PreconditionError(std::string(op) + ": middle cycle is not a non-contractible k-cycle");
  }
  if (same_cycle(middle, g.cuffs[0]) || same_cycle(middle, g.cuffs[1])) {
    throw PreconditionError(std::string(op) + ": middle cycle is a cuff");
  }
  require_cuffs_colored(g, psi, op);
  if (!winding_constraint_satisfied(g, psi)) throw PreconditionError(std::string(op) + ": winding constraint fails");
  if (!k_third_winding(g, psi)) throw PreconditionError(std::string(op) + ": winding is not +-k/3");

  const Piece p1 = subgraph_between(g, g.cuffs[0], middle);
  const Piece p2 = subgraph_between(g, middle, g.cuffs[1]);
  if (is_feq(p1.graph)) throw PreconditionError(std::string(op) + ": first half is a forced extension quadrangulation");
  if (is_feq(p2.graph)) throw PreconditionError(std::string(op) + ": second half is a forced extension quadrangulation");

  // First half with the middle cycle as cuff 1, so theta1' is offset on C1.
  const HomomorphismPair h1 = build_homomorphisms(swap_cuffs(p1.graph));
  const HomomorphismPair h2 = build_homomorphisms(p2.graph);
  if (!h1.theta_prime || !h2.theta_prime) throw Error(std::string(op) + ": missing second homomorphism on a half");

  const int n = g.vertex_count;
  auto lifted = [&](const CycleHomomorphism& h, const Piece& p, int sign, int shift) {
    std::vector<int> out(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < p.to_parent.size(); ++i) {
      out[static_cast<std::size_t>(p.to_parent[i])] = (((sign * h.residue[i] + shift) % k) + k) % k;
    }
    return out;
  };
  const std::vector<int> t1 = lifted(h1.theta, p1, 1, 0);
  const std::vector<int> t1p = lifted(*h1.theta_prime, p1, 1, 0);
  const std::vector<int> t2raw = lifted(h2.theta, p2, 1, 0);
  int sign = 0;
  int shift = 0;
  for (int s : {1, -1}) {
    const int v0 = middle[0];
    const int candidate = ((t1[static_cast<std::size_t>(v0)] - s * t2raw[static_cast<std::size_t>(v0)]) % k + k) % k;
    if (std::all_of(middle.begin(), middle.end(), [&](int v) {
          return ((s * t2raw[static_cast<std::size_t>(v)] + candidate) % k + k) % k == t1[static_cast<std::size_t>(v)];
        })) {
      sign = s;
      shift = candidate;
      break;
    }
  }
  if (sign == 0) throw Error(std::string(op) + ": halves disagree on the middle cycle");
  std::vector<int> t2 = lifted(h2.theta, p2, sign, shift);
  std::vector<int> t2p = lifted(*h2.theta_prime, p2, sign, shift);
  // The three candidates move the cuff-2 colors by 0, -d1 and d2 relative to
  // cuff 1. When the alignment above reflected the second half, d1 + d2 can
  // vanish mod 3 and two candidates coincide; exchanging the roles of theta2
  // and theta2' turns the offsets into d2, d2 - d1 and 0, which are distinct.
  const int v1 = g.cuffs[0][0];
  const int v2 = g.cuffs[1][0];
  const int d1 = ((t1p[static_cast<std::size_t>(v1)] - t1[static_cast<std::size_t>(v1)]) % k + k) % k;
  const int d2 = ((t2p[static_cast<std::size_t>(v2)] - t2[static_cast<std::size_t>(v2)]) % k + k) % k;
  if ((d1 + d2) % 3 == 0) std::swap(t2, t2p);

  auto merge = [&](const std::vector<int>& a, const std::vector<int>& b) {
    CycleHomomorphism h{k, a};
    for (int v = 0; v < n; ++v) {
      const auto i = static_cast<std::size_t>(v);
      if (b[i] == -1) continue;
      if (h.residue[i] != -1 && h.residue[i] != b[i]) throw Error(std::string(op) + ": halves disagree on the middle cycle");
      h.residue[i] = b[i];
    }
    return h;
  };
  const CycleHomomorphism candidates[] = {merge(t1, t2), merge(t1p, t2), merge(t1, t2p)};
  for (int i = 0; i < 3; ++i) {
    if (auto phi = pull_back(g, candidates[i], psi)) return extends(std::move(*phi), "nonfeq:theta*" + std::to_string(i + 1));
  }
  throw Error(std::string(op) + ": none of the three combined homomorphisms extends the precoloring");
}

bool is_critical(const EmbeddedGraph& g, const Budget& budget) {
  require_valid(g, "is_critical");
  if (g.vertex_count > budget.enumeration_vertices) {
    throw BudgetExceeded("is_critical: " + std::to_string(g.vertex_count) + " vertices exceed the enumeration budget of " +
                         std::to_string(budget.enumeration_vertices));
  }
  std::set<int> on_cuffs;
  std::set<Edge> cuff_edges;
  for (const Walk& c : g.cuffs) {
    on_cuffs.insert(c.begin(), c.end());
    for (const Edge& e : walk_edges(c)) cuff_edges.insert(e);
  }
  const Graph u = underlying_graph(g);
  for (int v = 0; v < g.vertex_count; ++v) {
    if (u.degree(v) == 0 && !on_cuffs.contains(v)) return false;
  }
  if (static_cast<int>(on_cuffs.size()) == g.vertex_count && cuff_edges.size() == g.edges.size()) return false;

  const std::vector<Coloring> precolorings = proper_cuff_colorings(g);
  std::vector<char> extends_in_g;
  for (const Coloring& psi : precolorings) extends_in_g.push_back(oracle_extend(u, psi, budget).extends() ? 1 : 0);
  for (const Edge& e : g.edges) {
    if (cuff_edges.contains(e)) continue;
    const Graph smaller = u.without_edge(e);
    bool gains = false;
    for (std::size_t i = 0; i < precolorings.size() && !gains; ++i) {
      gains = !extends_in_g[i] && oracle_extend(smaller, precolorings[i], budget).extends();
    }
    if (!gains) return false;
  }
  return true;
}

bool is_4_critical(const Graph& g, const Budget& budget) {
  if (g.vertex_count > budget.enumeration_vertices) {
    throw BudgetExceeded("is_4_critical: " + std::to_string(g.vertex_count) + " vertices exceed the enumeration budget of " +
                         std::to_string(budget.enumeration_vertices));
  }
  for (int v = 0; v < g.vertex_count; ++v) {
    if (g.degree(v) == 0) return false;
  }
  if (is_three_colorable(g, budget)) return false;
  for (const Edge& e : g.edges()) {
    if (!is_three_colorable(g.without_edge(e), budget)) return false;
  }
  return true;
}

Coloring parse_precoloring(const std::string& text, int vertex_count) {
  Coloring out(vertex_count);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error("precoloring entry '" + item + "' is not of the form v:c");
    int v = 0;
    int c = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("trailing");
      c = std::stoi(item.substr(colon + 1), &used);
      if (used != item.size() - colon - 1) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw Error("precoloring entry '" + item + "' is not of the form v:c");
    }
    if (v < 0 || v >= vertex_count) throw Error("precoloring vertex out of range: " + std::to_string(v));
    if (c < 1 || c > 3) throw Error("precoloring color out of range: " + std::to_string(c));
    if (out.assigned(v) && out[v] != c) throw Error("precoloring assigns vertex " + std::to_string(v) + " twice");
    out.set(v, static_cast<Color>(c));
  }
  return out;
}

}  // namespace tfc
