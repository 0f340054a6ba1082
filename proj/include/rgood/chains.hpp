#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rgood/certificate.hpp"
#include "rgood/coloring.hpp"
#include "rgood/search.hpp"

namespace rgood {

// Ordered vertex list covered by intervals whose elements induce red cliques.
// Consecutive intervals overlap in exactly ell positions; for a closed chain
// positions are taken modulo the list length and the last interval wraps onto
// the first.
struct CliqueChain {
  bool closed = false;
  int k = 0;
  int ell = 0;
  std::vector<Vertex> vertices;
  std::vector<Interval> intervals;

  bool operator==(const CliqueChain&) const = default;
};

struct ChainValidation {
  bool ok = true;
  std::vector<std::string> violations;
  // Per element: more than max{k, 2*ell} vertices.
  std::vector<bool> flexible;
  // Per vertex position: covered by two intervals.
  std::vector<bool> spine;
  // Closed chain consisting of one element spanning the whole list.
  bool trivial = false;
};

// Checks the structural conditions and, when a colouring is given, that every
// element is a red clique.
ChainValidation validate_chain(const CliqueChain& chain, const TwoColoring* coloring = nullptr);

// Vertex sets of the elements, in interval order.
std::vector<std::vector<Vertex>> chain_elements(const CliqueChain& chain);

// Builds a chain from elements listed in order, where the last ell vertices of
// each element are the first ell vertices of the next (cyclically if closed).
CliqueChain chain_from_elements(const std::vector<std::vector<Vertex>>& elements, int k, int ell, bool closed);

// Spanning ell-path of an open chain, or the cyclic order of a spanning
// ell-cycle of a closed one. Throws InvalidInput on an invalid chain.
std::vector<Vertex> spanning_path(const CliqueChain& chain);

// Opens a closed chain by splitting its first flexible element at the median.
// Returns nothing when no element is large enough to leave two halves of
// admissible size.
std::optional<CliqueChain> cut_open(const CliqueChain& chain);

Certificate chain_certificate(const CliqueChain& chain);
CliqueChain chain_from_certificate(const Certificate& cert);

struct MonoBlock {
  Color color = Color::kRed;
  std::vector<Vertex> vertices;
};

struct CliquePartition {
  std::vector<MonoBlock> blocks;
  // Contains neither a red K_a nor a blue K_b.
  std::vector<Vertex> leftover;
  SearchStats stats;
};

// Greedy extraction of red K_{red_size} (preferred) and blue K_{blue_size}.
CliquePartition clique_partition(const TwoColoring& c, int red_size, int blue_size,
                                 const SearchLimits& limits = {});

// Closed walk through a tree on 0..n-1 traversing every edge twice, starting
// and ending at vertex 0 (children visited in increasing order).
std::vector<int> double_tree_walk(int n, const std::vector<std::pair<int, int>>& tree_edges);

// Forest over block indices with two vertex-disjoint connecting ell-paths per
// forest edge. paths[e][i] starts with ell vertices of blocks[forest[e].first]
// and ends with ell vertices of blocks[forest[e].second].
struct PathSystem {
  int k = 0;
  int ell = 0;
  std::vector<std::vector<Vertex>> blocks;
  std::vector<std::pair<int, int>> forest;
  std::vector<std::array<std::vector<Vertex>, 2>> paths;
  int components = 0;
  // Components remained at or above the target count.
  bool stalled = false;
  std::string diagnostic;
  SearchStats stats;
};

// Edges in a connecting path: ceil(ell / (k - ell)).
int connector_edges(int k, int ell);

// Merges components while two vertex-disjoint red connectors join blocks of
// distinct components, keeping the vertices used in each block at most
// epsilon * |block|.
PathSystem build_path_system(const TwoColoring& c, const std::vector<std::vector<Vertex>>& blocks, int ell,
                             int target_components, double epsilon);

CheckResult validate_path_system(const TwoColoring& c, const PathSystem& system, double epsilon);

// True when some pair of distinct components still admits two vertex-disjoint
// connectors among the unused vertices.
bool path_system_extendable(const TwoColoring& c, const PathSystem& system, double epsilon);

struct ChainAssembly {
  std::vector<CliqueChain> chains;
  // Block vertices left outside every chain.
  int leftover = 0;
};

// One closed chain per forest component (a lone block gives a one-element
// trivial chain).
ChainAssembly assemble_chains(const TwoColoring& c, const PathSystem& system);

}  // namespace rgood
