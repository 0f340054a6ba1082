#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rgood/coloring.hpp"
#include "rgood/hypergraph.hpp"
#include "rgood/json_io.hpp"
#include "rgood/pattern.hpp"
#include "rgood/tournament.hpp"

namespace rgood {

// An explicit colouring claimed to avoid a red and a blue target.
struct LowerBoundInstance {
  std::string construction;
  TwoColoring coloring;
  // Blocks V_1..V_r as consecutive vertex ranges.
  std::vector<std::vector<Vertex>> partition;
  std::vector<std::pair<std::string, long long>> parameters;
  std::optional<Pattern> red_target;
  std::optional<Pattern> blue_target;
  std::vector<std::string> flags;

  long long parameter(const std::string& name) const;
  bool has_flag(const std::string& flag) const;
};

// Consecutive blocks of the given sizes starting at vertex 0.
std::vector<std::vector<Vertex>> consecutive_blocks(const std::vector<int>& sizes);

// Colours every k-set of [n] red exactly when `is_red` holds.
TwoColoring coloring_from_rule(int k, int n, const std::function<bool(const KSet&)>& is_red);

// chi-1 red cliques of order vG-1 and one of order sigma-1.
LowerBoundInstance burr_coloring(int k, int chi, int sigma, int vg);

// Red: inside one block, or meeting the last block and every other block in at
// most ell-1 vertices. Blue target defaults to K^(k)_{chi(k-1)}.
LowerBoundInstance ell_path_lb(int k, int ell, int n, int chi);

// Default blue target of the loose-path and loose-cycle constructions: classes
// of size (chi-1)(k-2)+bound+1 (chi-1 of them) and t, edges meeting a class in
// exactly k-1 vertices.
Hypergraph near_class_target(int k, int chi, int t, int bound);

// Red: inside one of the first chi-1 blocks, or one vertex of block chi-1 plus
// an edge of J on the last block. J must be (k-1)-uniform with independence
// number below t and no two-edge loose path.
LowerBoundInstance loose_path_lb(int k, int chi, int n, int t, const Hypergraph& j);

enum class LooseCycleVariant { kTau, kPencil };

// kTau: chi-1 blocks of order n-1 and J, red rule as in loose_path_lb (block
// chi-1 plays the attaching role). kPencil: chi-1 blocks of order n-1 and a
// block of order q whose (k-1)-subsets S_1, S_2, ... (colex order) attach to
// single vertices of V_1, V_2, ... respectively. Requires n >= 3(k-1).
LowerBoundInstance loose_cycle_lb(int k, int chi, int n, int t, LooseCycleVariant variant, int q,
                                  const std::optional<Hypergraph>& j = std::nullopt);

// Red: triples with two vertices in V_i and one in V_j for i <= j, over m-1
// blocks of order t. Blue target H(C_3, m).
LowerBoundInstance non_transitive_lb(int m, int t);

// Red: V_iV_iV_i triples and V_iV_iV_j triples for arcs i -> j of T, over v(T)
// blocks of order floor(2n/3)-2. Blue target H(TT_chi, v(T)+1) with chi one
// more than the largest transitive subtournament of T.
LowerBoundInstance transitive_lb(const Tournament& t, int n);

struct TauConstruction {
  Hypergraph graph;
  // alpha < k: the graph is alpha-1 isolated vertices.
  bool trivial_regime = false;
};

// r disjoint copies of K^(k)_{2k-2} plus s isolated vertices, alpha-1 = r(k-1)+s.
TauConstruction tau_lower_construction(int k, int alpha);

// Coloring plus manifest (partition, parameters, claimed targets, flags).
Json instance_to_json(const LowerBoundInstance& instance);

}  // namespace rgood
