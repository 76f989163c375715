#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tfc/embedding.hpp"
#include "tfc/families.hpp"
#include "tfc/homotopy.hpp"

using namespace tfc;
using tfc::test::prism;

TEST_CASE("cocycle classifies prism cycles") {
  const EmbeddedGraph g = prism();
  const Cocycle c = build_cocycle(g);
  CHECK_FALSE(is_contractible(c, g.cuffs[0]));
  CHECK_FALSE(is_contractible(c, g.cuffs[1]));
  for (const Walk& f : g.faces) CHECK(is_contractible(c, f));
}

TEST_CASE("cocycle on a grid") {
  const EmbeddedGraph g = gen_cylinder_grid(3, 5);
  const Cocycle c = build_cocycle(g);
  CHECK(is_contractible(c, {0, 1, 4, 3}));
  CHECK_FALSE(is_contractible(c, {6, 7, 8}));
  CHECK_FALSE(is_contractible(c, {0, 1, 4, 5, 2}));
}

TEST_CASE("cocycle preconditions") {
  CHECK_THROWS_WITH_AS(build_cocycle(test::c4_disk()), doctest::Contains("disk has no non-contractible cycles"),
                       PreconditionError);
  const EmbeddedGraph g = test::single_cycle(5);
  REQUIRE(is_valid(g));
  const Cocycle c = build_cocycle(g);
  CHECK(std::abs(c.sum(g.cuffs[0])) == 1);
}

TEST_CASE("contractibility does not depend on the dual path") {
  std::mt19937 rng(11);
  for (int round = 0; round < 12; ++round) {
    const int k = 3 + static_cast<int>(rng() % 3);
    const int m = 2 + static_cast<int>(rng() % 3);
    const EmbeddedGraph g = round % 3 == 0 ? gen_split_grid(k, m) : gen_cylinder_grid(k, m);
    const Cocycle a = build_cocycle(g);
    const Cocycle b = build_cocycle(g, a.edges());
    int crossed_a = 0;
    for (int v : a.values()) crossed_a += v != 0;
    REQUIRE(crossed_a > 0);
    for (const Walk& cycle : enumerate_cycles(underlying_graph(g), 3, 8)) {
      CHECK(is_contractible(a, cycle) == is_contractible(b, cycle));
    }
  }
}

TEST_CASE("contractible cycles of quadrangulations are even") {
  for (const EmbeddedGraph& g : {gen_cylinder_grid(3, 4), gen_cylinder_grid(5, 3), gen_capped_grid(1, 3, 1)}) {
    const Cocycle c = build_cocycle(g);
    for (const Walk& cycle : enumerate_cycles(underlying_graph(g), 3, 9)) {
      if (is_contractible(c, cycle)) CHECK(cycle.size() % 2 == 0);
    }
  }
}

TEST_CASE("shortest non-contractible cycle") {
  const CycleWitness p = shortest_noncontractible(prism());
  CHECK(p.length == 3);
  CHECK(same_cycle(p.cycle, {0, 1, 2}));
  CHECK(shortest_noncontractible(gen_cylinder_grid(4, 3)).length == 4);
  CHECK(shortest_noncontractible(test::single_cycle(6)).length == 6);
  CHECK(shortest_noncontractible(gen_feq_chain(5)).length == 3);
}

TEST_CASE("covering-space girth matches exhaustive enumeration") {
  std::mt19937 rng(5);
  for (int round = 0; round < 10; ++round) {
    const int k = 3 + static_cast<int>(rng() % 4);
    const int m = 2 + static_cast<int>(rng() % 3);
    const EmbeddedGraph g = round % 2 ? gen_tapered(3, 1, m) : gen_split_grid(k, m);
    const Cocycle c = build_cocycle(g);
    int brute = 0;
    for (const Walk& cycle : enumerate_cycles(underlying_graph(g), 3, 10)) {
      if (!is_contractible(c, cycle) && (brute == 0 || static_cast<int>(cycle.size()) < brute)) {
        brute = static_cast<int>(cycle.size());
      }
    }
    CHECK(noncontractible_girth(g, c, 10) == brute);
  }
}

TEST_CASE("enumerate_cycles counts") {
  const Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(enumerate_cycles(k4, 3, 3).size() == 4);
  CHECK(enumerate_cycles(k4, 4, 4).size() == 3);
  CHECK(noncontractible_cycles(prism(), build_cocycle(prism()), 3).size() == 2);
}

TEST_CASE("cuff distance") {
  for (int m = 2; m <= 8; ++m) CHECK(cuff_distance(gen_cylinder_grid(3, m)) == m - 1);
  CHECK(cuff_distance(feq_gadget()) == 0);
  CHECK(cuff_distance(prism()) == 1);
  CHECK(shortest_cuff_path(prism()).size() == 2);
}

TEST_CASE("walk_sides splits a grid at a level") {
  const EmbeddedGraph g = gen_cylinder_grid(3, 4);
  const auto sides = walk_sides(g, {3, 4, 5});
  const int faces = static_cast<int>(g.faces.size());
  CHECK(sides[static_cast<std::size_t>(faces)] == 1);
  CHECK(sides[static_cast<std::size_t>(faces + 1)] == 2);
  int one = 0;
  for (int i = 0; i < faces; ++i) one += sides[static_cast<std::size_t>(i)] == 1;
  CHECK(one == 3);
  CHECK_THROWS_AS(walk_sides(g, {0, 1, 4, 3}), PreconditionError);
}

TEST_CASE("identify_across_quad") {
  const EmbeddedGraph g = gen_cylinder_grid(4, 2);
  for (int f = 0; f < static_cast<int>(g.faces.size()); ++f) {
    for (int pos = 0; pos < 2; ++pos) {
      const Identified r = identify_across_quad(g, f, pos);
      CHECK(is_valid(r.graph));
      CHECK(r.graph.vertex_count == g.vertex_count - 1);
      CHECK(r.graph.faces.size() == g.faces.size() - 1);
    }
  }
  SUBCASE("the two merged edge pairs disappear") {
    const EmbeddedGraph h = gen_cylinder_grid(4, 3);
    const Identified once = identify_across_quad(h, 0, 0);
    REQUIRE(is_valid(once.graph));
    CHECK(once.graph.edges.size() == h.edges.size() - 2);
  }
  SUBCASE("adjacent opposite corners would make a loop") {
    // Quad 0 1 2 3 whose diagonal 1-3 is an edge drawn outside it.
    const EmbeddedGraph d = from_walks(Surface::Disk, 5, {{0, 1, 2, 3}, {1, 3, 2}, {1, 4, 3}}, {{0, 3, 4, 1}});
    REQUIRE(is_valid(d));
    CHECK_THROWS_AS(identify_across_quad(d, 0, 0), PreconditionError);
  }
}

TEST_CASE("cut_along_path") {
  SUBCASE("prism along a vertical edge") {
    const Piece p = cut_along_path(prism(), {0, 3});
    CHECK(p.graph.surface == Surface::Disk);
    CHECK(is_valid(p.graph));
    CHECK(p.graph.cuffs[0].size() == 8);
  }
  SUBCASE("grids along a shortest path") {
    for (int m = 2; m <= 6; ++m) {
      const EmbeddedGraph g = gen_cylinder_grid(3, m);
      const Piece p = cut_along_path(g, shortest_cuff_path(g));
      CHECK(is_valid(p.graph));
      CHECK(is_quadrangulation(p.graph));
      CHECK(static_cast<int>(p.graph.cuffs[0].size()) == 2 * (m - 1) + 6);
      CHECK(is_bipartite(underlying_graph(p.graph)));
    }
  }
  SUBCASE("degenerate path") { CHECK_THROWS_AS(cut_along_path(prism(), {0}), PreconditionError); }
}
