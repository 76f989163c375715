#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tfc/coloring.hpp"
#include "tfc/families.hpp"
#include "tfc/feq.hpp"
#include "tfc/homotopy.hpp"
#include "tfc/winding.hpp"

using namespace tfc;

namespace {

const Graph kK4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});

// Does some total proper coloring agree with psi? Plain 3^n enumeration.
bool brute_extends(const Graph& g, const Coloring& psi) {
  const int n = g.vertex_count;
  Coloring c(n);
  for (int v = 0; v < n; ++v) c.set(v, psi.assigned(v) ? psi[v] : 1);
  while (true) {
    if (is_proper(g, c)) return true;
    int v = 0;
    while (v < n && (psi.assigned(v) || c[v] == 3)) {
      if (!psi.assigned(v)) c.set(v, 1);
      ++v;
    }
    if (v == n) return false;
    c.set(v, static_cast<Color>(c[v] + 1));
  }
}

void check_witness(const Graph& g, const Coloring& psi, const ExtensionVerdict& v) {
  REQUIRE(v.witness.has_value());
  const Coloring& w = *v.witness;
  CHECK(is_proper(g, w));
  for (int u = 0; u < g.vertex_count; ++u) {
    CHECK(w.assigned(u));
    if (psi.assigned(u)) CHECK(w[u] == psi[u]);
  }
}

int first_wide_chain() {
  for (int t = 1;; ++t) {
    if (is_wide_feq(gen_feq_chain(t))) return t;
  }
}

}  // namespace

TEST_CASE("oracle on small graphs") {
  const ExtensionVerdict k4 = oracle_extend(kK4, Coloring(4));
  CHECK_FALSE(k4.extends());
  CHECK(k4.violated == Criterion::NoExtension);
  CHECK_FALSE(is_three_colorable(kK4));
  CHECK(is_three_colorable(kK4.without_edge({0, 1})));

  const EmbeddedGraph prism = test::prism();
  const Coloring aligned = parse_precoloring("0:1,1:2,2:3,3:2,4:3,5:1", 6);
  const ExtensionVerdict p = oracle_extend(prism, aligned);
  CHECK(p.extends());
  check_witness(underlying_graph(prism), aligned, p);

  const EmbeddedGraph c4 = test::c4_disk();
  for (const Coloring& psi : proper_cuff_colorings(c4)) CHECK(oracle_extend(c4, psi).extends());
}

TEST_CASE("oracle agrees with brute force on random graphs") {
  std::mt19937 rng(2024);
  std::bernoulli_distribution coin(0.4);
  for (int round = 0; round < 150; ++round) {
    const int n = 4 + static_cast<int>(rng() % 7);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.push_back({u, v});
      }
    }
    const Graph g = Graph::from_edges(n, edges);
    Coloring psi(n);
    for (int v = 0; v < n; ++v) {
      if (rng() % 3 == 0) psi.set(v, static_cast<Color>(1 + rng() % 3));
    }
    const ExtensionVerdict v = oracle_extend(g, psi);
    CHECK(v.extends() == (is_proper(g, psi) && brute_extends(g, psi)));
    if (v.extends()) check_witness(g, psi, v);
    // Same input, same witness.
    CHECK(oracle_extend(g, psi).witness == v.witness);
  }
}

TEST_CASE("oracle budget") {
  const EmbeddedGraph g = gen_cylinder_grid(3, 8);
  CHECK_THROWS_AS(oracle_extend(g, Coloring(24), Budget{10, 10}), BudgetExceeded);
  CHECK_NOTHROW(oracle_extend(g, Coloring(24), Budget{24, 10}));
  CHECK_THROWS_AS(is_critical(g), BudgetExceeded);
}

TEST_CASE("proper cuff colorings") {
  const EmbeddedGraph prism = test::prism();
  const auto all = proper_cuff_colorings(prism);
  CHECK(all.size() == 36);
  for (const Coloring& c : all) {
    for (int v = 0; v < 6; ++v) CHECK(c.assigned(v));
  }
  CHECK(std::is_sorted(all.begin(), all.end(), [](const Coloring& a, const Coloring& b) { return a.values() < b.values(); }));
  CHECK(proper_cuff_colorings(test::c4_disk()).size() == 18);
}

TEST_CASE("wide forced quadrangulation decisions") {
  const EmbeddedGraph g = gen_feq_chain(first_wide_chain());
  const HomomorphismPair h = build_homomorphisms(g);
  const int n = g.vertex_count;
  const Walk& c1 = g.cuffs[0];
  const Walk& c2 = g.cuffs[1];

  SUBCASE("coloring transported through theta extends") {
    Coloring psi(n);
    for (int v : c1) psi.set(v, static_cast<Color>(h.theta(v) + 1));
    for (int v : c2) psi.set(v, static_cast<Color>(h.theta(v) + 1));
    const ExtensionVerdict v = decide_wide_feq(g, psi);
    CHECK(v.extends());
    CHECK(v.route == "theta");
    check_witness(underlying_graph(g), psi, v);
  }
  SUBCASE("theta-identified vertices with different colors fail") {
    Coloring psi(n);
    for (int v : c1) psi.set(v, static_cast<Color>(h.theta(v) + 1));
    // Rotate the cuff-2 colors: the windings still cancel but theta-equal
    // vertices now disagree.
    for (int v : c2) psi.set(v, static_cast<Color>((h.theta(v) + 1) % 3 + 1));
    REQUIRE(winding_constraint_satisfied(g, psi));
    const ExtensionVerdict v = decide_wide_feq(g, psi);
    CHECK_FALSE(v.extends());
    CHECK(v.violated == Criterion::ThetaIdentification);
    CHECK_FALSE(oracle_extend(g, psi).extends());
  }
  SUBCASE("winding violation fails") {
    Coloring psi(n);
    for (int v : c1) psi.set(v, static_cast<Color>(h.theta(v) + 1));
    for (int v : c2) psi.set(v, static_cast<Color>((3 - h.theta(v)) % 3 + 1));
    REQUIRE_FALSE(winding_constraint_satisfied(g, psi));
    const ExtensionVerdict v = decide_wide_feq(g, psi);
    CHECK(v.violated == Criterion::WindingConstraint);
  }
  SUBCASE("narrow instances are rejected") {
    CHECK_THROWS_AS(decide_wide_feq(gen_feq_chain(2), proper_cuff_colorings(gen_feq_chain(2)).front()),
                    PreconditionError);
  }
}

TEST_CASE("far regimes") {
  CHECK(far_regime(gen_cylinder_grid(3, 14)).equal_cuffs);
  const FarRegime c4 = far_regime(gen_cylinder_grid(4, 9));
  CHECK_FALSE(c4.equal_cuffs);
  CHECK_FALSE(c4.long_middle);
  CHECK_FALSE(c4.why_not.empty());
  CHECK_THROWS_AS(decide_far_quadrangulation(gen_cylinder_grid(4, 9), Coloring(36)), PreconditionError);
}

TEST_CASE("far decisions agree with the oracle on C3 x P14") {
  const EmbeddedGraph g = gen_cylinder_grid(3, 14);
  std::mt19937 rng(9);
  const auto all = proper_cuff_colorings(g);
  for (const Coloring& psi : all) {
    if (rng() % 3) continue;
    const ExtensionVerdict d = decide_far_quadrangulation(g, psi);
    CHECK(d.extends() == winding_constraint_satisfied(g, psi));
    CHECK(d.extends() == oracle_extend(g, psi).extends());
    if (d.extends()) check_witness(underlying_graph(g), psi, d);
  }
}

TEST_CASE("construct_extension_nonfeq") {
  const EmbeddedGraph g = gen_cylinder_grid(3, 14);  // level j holds 3j, 3j+1, 3j+2
  const Walk middle{21, 22, 23};
  SUBCASE("matching patterns") {
    const Coloring psi = parse_precoloring("0:1,1:2,2:3,39:1,40:2,41:3", 42);
    const ExtensionVerdict v = construct_extension_nonfeq(g, middle, psi);
    CHECK(v.extends());
    check_witness(underlying_graph(g), psi, v);
    CHECK(full_coloring_winding_audit(g, *v.witness).total == 0);
  }
  SUBCASE("patterns shifted by one") {
    const Coloring psi = parse_precoloring("0:1,1:2,2:3,39:2,40:3,41:1", 42);
    const ExtensionVerdict v = construct_extension_nonfeq(g, middle, psi);
    CHECK(v.extends());
    check_witness(underlying_graph(g), psi, v);
    CHECK(v.route.rfind("nonfeq:theta*", 0) == 0);
  }
  SUBCASE("every aligned precoloring succeeds") {
    for (const Coloring& psi : proper_cuff_colorings(g)) {
      if (!winding_constraint_satisfied(g, psi)) continue;
      const ExtensionVerdict v = construct_extension_nonfeq(g, middle, psi);
      check_witness(underlying_graph(g), psi, v);
    }
  }
  SUBCASE("hypotheses") {
    const Coloring psi = parse_precoloring("0:1,1:2,2:3,39:1,40:2,41:3", 42);
    CHECK_THROWS_AS(construct_extension_nonfeq(g, {0, 1, 2}, psi), PreconditionError);
    CHECK_THROWS_AS(construct_extension_nonfeq(g, {21, 22, 25, 24}, psi), PreconditionError);
    CHECK_THROWS_AS(construct_extension_nonfeq(gen_cylinder_grid(3, 6), {6, 7, 8}, psi), PreconditionError);
  }
  SUBCASE("forced first half is rejected") {
    const EmbeddedGraph capped = gen_capped_grid(8, 14, 1);
    const Cocycle cocycle = build_cocycle(capped);
    bool tested = false;
    for (const Walk& k : noncontractible_cycles(capped, cocycle, 3)) {
      if (same_cycle(k, capped.cuffs[0]) || same_cycle(k, capped.cuffs[1])) continue;
      const Piece p = subgraph_between(capped, capped.cuffs[0], k);
      if (!is_feq(p.graph) || p.graph.faces.empty()) continue;
      Coloring psi(capped.vertex_count);
      const auto options = proper_cuff_colorings(capped);
      for (const Coloring& c : options) {
        if (winding_constraint_satisfied(capped, c)) {
          psi = c;
          break;
        }
      }
      CHECK_THROWS_WITH_AS(construct_extension_nonfeq(capped, k, psi), doctest::Contains("forced"), PreconditionError);
      tested = true;
      break;
    }
    CHECK(tested);
  }
}

TEST_CASE("criticality relative to the cuffs") {
  CHECK_FALSE(is_critical(test::single_cycle(4)));
  // An interior vertex joined to two opposite vertices of the cuff changes nothing.
  const EmbeddedGraph spoke = from_walks(Surface::Disk, 5, {{0, 1, 2, 4}, {0, 4, 2, 3}}, {{0, 3, 2, 1}});
  REQUIRE(is_valid(spoke));
  CHECK_FALSE(is_critical(spoke));

  // The prism, against a direct enumeration of the definition.
  const EmbeddedGraph prism = test::prism();
  const Graph u = underlying_graph(prism);
  const auto all = proper_cuff_colorings(prism);
  bool expected = true;
  for (const Edge& e : prism.edges) {
    bool cuff_edge = false;
    for (const Walk& c : prism.cuffs) {
      for (const Edge& f : walk_edges(c)) cuff_edge = cuff_edge || f == e;
    }
    if (cuff_edge) continue;
    bool gains = false;
    for (const Coloring& psi : all) gains = gains || (!brute_extends(u, psi) && brute_extends(u.without_edge(e), psi));
    expected = expected && gains;
  }
  CHECK(is_critical(prism) == expected);
}

TEST_CASE("4-criticality") {
  CHECK(is_4_critical(kK4));
  CHECK_FALSE(is_4_critical(underlying_graph(test::c4_disk())));
  CHECK(is_4_critical(underlying_graph(gen_thomas_walls(2).embedding)));
  CHECK_FALSE(is_4_critical(Graph::from_edges(5, kK4.edges())));  // isolated vertex
}

TEST_CASE("parse_precoloring") {
  const Coloring c = parse_precoloring("0:1,3:3", 5);
  CHECK(c[0] == 1);
  CHECK(c[3] == 3);
  CHECK_FALSE(c.assigned(1));
  CHECK(parse_precoloring("", 3) == Coloring(3));
  CHECK_THROWS_AS(parse_precoloring("7:1", 5), Error);
  CHECK_THROWS_AS(parse_precoloring("1:4", 5), Error);
  CHECK_THROWS_AS(parse_precoloring("1-2", 5), Error);
  CHECK_THROWS_AS(parse_precoloring("1:2,1:3", 5), Error);
  CHECK(std::string(to_string(Criterion::ThetaIdentification)) == "theta-identification");
}
