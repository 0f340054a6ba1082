#pragma once

#include <vector>

#include "rgood/hypergraph.hpp"

namespace rgood {

struct RamseyProfile {
  int chi = 0;
  int sigma = 0;
  // witness[v] = colour class of vertex v, classes numbered in first-use order.
  std::vector<int> witness;
  // Set when H has no edges; sigma is then reported as v(H).
  bool edgeless = false;

  std::vector<std::vector<Vertex>> classes() const;
};

// Default exact-search guard on v(H).
inline constexpr int kDefaultProfileGuard = 16;

// Exact chromatic number and minimum class size over optimal proper colourings.
RamseyProfile ramsey_profile(const Hypergraph& h, int guard = kDefaultProfileGuard);

// True iff `classes` is a proper colouring of h (no edge inside one class).
bool is_proper_coloring(const Hypergraph& h, const std::vector<int>& classes);

struct BurrBound {
  long long value = 0;
  // False when vG < sigma, i.e. outside the bound's hypothesis.
  bool hypothesis_holds = true;
};

BurrBound burr_bound(int vg, const RamseyProfile& profile);
BurrBound burr_bound(int vg, int chi, int sigma);

}  // namespace rgood
