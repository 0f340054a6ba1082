#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rgood/certificate.hpp"
#include "rgood/coloring.hpp"
#include "rgood/hypergraph.hpp"
#include "rgood/pattern.hpp"
#include "rgood/profile.hpp"
#include "rgood/tournament.hpp"

namespace rgood {

struct ExactOptions {
  int jobs = 1;
  // Total search nodes before giving up with a lower bound (0 = unlimited).
  std::uint64_t node_budget = 0;
};

// Isomorphism classes kept after extending to `order` vertices.
struct LevelStat {
  int order = 0;
  std::uint64_t classes = 0;
  std::uint64_t nodes = 0;
};

struct RamseyResult {
  // Set when no free colouring exists on `value` vertices.
  bool exact = false;
  int value = 0;
  // Largest order with a verified free colouring, plus one.
  int lower_bound = 0;
  // Free colouring on lower_bound - 1 vertices.
  TwoColoring lower_witness;
  std::vector<LevelStat> levels;
  SearchStats stats;
  std::string note;
};

// Least n such that every colouring of K_n^(k) has a red copy of `red` or a blue
// copy of `blue`, searched level by level over free colourings up to
// isomorphism. Stops with a lower bound at n_cap, when C(n,k) exceeds 64, or
// when the node budget runs out.
RamseyResult ramsey_exact(const Pattern& red, const Pattern& blue, int n_cap, const ExactOptions& options = {});

// Canonical bitmap of a colouring with C(n,k) <= 64: least image over the
// relabellings that order vertices by a refined red-degree invariant.
std::uint64_t canonical_coloring_bits(int k, int n, std::uint64_t red_bits);

struct TauResult {
  bool exact = false;
  int value = 0;
  // Bracket when not exact: [lower, upper].
  int lower = 0;
  int upper = 0;
  Hypergraph witness;
  // alpha < k (value alpha-1) or alpha = 1 (value 0).
  bool trivial_regime = false;
  // min_alpha[c] = least independence number of a connected spanning family
  // on c vertices with no two-edge loose path (-1 when none exists or it was
  // not computed).
  std::vector<int> min_alpha;
  SearchStats stats;
  std::string note;
};

// Largest n admitting a k-graph on n vertices with independence number below
// alpha and no two-edge loose path, assembled from connected components.
TauResult tau_exact(int k, int alpha, int n_cap = 64);

struct DirectedRamseyResult {
  bool exact = false;
  int value = 0;
  // TT_chi-free tournament on value - 1 vertices (or on the last order reached).
  Tournament witness;
  std::vector<LevelStat> levels;
  std::string note;
};

// Least N such that every tournament on N vertices contains TT_chi.
DirectedRamseyResult directed_ramsey_exact(int chi, int n_cap = 9, const ExactOptions& options = {});

// Least relabelled arc bitstring within score cells.
std::uint64_t canonical_tournament_bits(const Tournament& t);

struct GapCheck {
  int chi = 0;
  int value = 0;
  int previous = 0;
  bool inequality_holds = false;
  // Witness for chi-1 plus a dominating and a dominated vertex.
  Tournament augmented;
  bool augmented_free = false;
  bool ok = false;
};

// Checks R(chi) >= R(chi-1) + 2 for chi >= 3 and re-validates the augmented
// witness on R(chi-1)+1 vertices.
GapCheck consecutive_gap_check(int chi, int n_cap = 9, const ExactOptions& options = {});

// Adds a vertex dominating all others and one dominated by all, joined by an
// arc from the dominated to the dominating vertex.
Tournament augment_tournament(const Tournament& t);

enum class Verdict { kGood, kNotGood, kUndecided };
const char* verdict_name(Verdict v);

struct GapReport {
  long long burr = 0;
  bool burr_hypothesis = true;
  bool exact = false;
  long long value = 0;
  long long lower = 0;
  std::optional<long long> upper;
  long long gap = 0;
  Verdict verdict = Verdict::kUndecided;
};

GapReport goodness_gap(const Pattern& g, const Hypergraph& h, const RamseyResult& ramsey);
// Bracket-only variant: a verified free colouring on N vertices gives R > N.
GapReport goodness_gap(const Pattern& g, const Hypergraph& h, long long verified_lower,
                       std::optional<long long> upper = std::nullopt);

}  // namespace rgood
