#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "tfc/embedding.hpp"
#include "tfc/families.hpp"

namespace tfc::test {

inline std::string fixture_text(const std::string& name) {
  std::ifstream in(std::string(TFC_FIXTURES) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// C3 x K2; cuffs 0 1 2 and 3 5 4.
inline EmbeddedGraph prism() { return gen_cylinder_grid(3, 2); }

inline EmbeddedGraph c4_disk() { return from_walks(Surface::Disk, 4, {{0, 1, 2, 3}}, {{0, 3, 2, 1}}); }

// The graph consisting of one k-cycle that serves as both cuffs.
inline EmbeddedGraph single_cycle(int k) {
  Walk w;
  for (int i = 0; i < k; ++i) w.push_back(i);
  return from_walks(Surface::Cylinder, k, {}, {w, reversed(w)});
}

// Total coloring drawn uniformly; not necessarily proper.
inline Coloring random_coloring(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(1, 3);
  Coloring c(n);
  for (int v = 0; v < n; ++v) c.set(v, static_cast<Color>(pick(rng)));
  return c;
}

}  // namespace tfc::test
