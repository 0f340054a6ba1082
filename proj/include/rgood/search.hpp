#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rgood/certificate.hpp"
#include "rgood/coloring.hpp"
#include "rgood/hypergraph.hpp"
#include "rgood/pattern.hpp"
#include "rgood/tournament.hpp"

namespace rgood {

// Size guards and budgets for exact searches. A value of -1 (or 0 for the node
// budget) selects the operation's default. Beyond the vertex guard a search
// either throws GuardExceeded or, with allow_inexact, runs under the node
// budget and marks its result inexact if the budget runs out.
struct SearchLimits {
  int max_vertices = -1;
  std::uint64_t node_budget = 0;
  bool allow_inexact = false;
};

// Default guards; the RGOOD_GUARDS environment variable (comma-separated key=value
// pairs: path_tight, path_loose, path_other, independence, embedding) overrides them.
int default_path_guard(int k, int ell);
int default_independence_guard();
int default_embedding_guard();

struct SearchOutcome {
  std::optional<Certificate> witness;
  SearchStats stats;
  bool exact = true;
};

struct PathSearchResult {
  int edges = 0;
  // ell + edges*(k-ell); a path with no edges counts ell vertices.
  int vertices = 0;
  Certificate certificate;
};

// Longest monochromatic ell-path. Stops early once `stop_at_vertices` (if
// positive) is reached.
PathSearchResult longest_mono_ell_path(const TwoColoring& c, int ell, Color color, const SearchLimits& limits = {},
                                       int stop_at_vertices = 0);

// Monochromatic ell-cycle on exactly p vertices.
SearchOutcome find_mono_ell_cycle(const TwoColoring& c, int ell, int p, Color color,
                                  const SearchLimits& limits = {});

// Injective embedding of h whose edges all receive `color`. domains[u], when
// given, restricts the image of pattern vertex u.
SearchOutcome find_mono_copy(const TwoColoring& c, const Hypergraph& h, Color color,
                             const SearchLimits& limits = {}, const std::vector<VertexMask>& domains = {});

// Monochromatic copy of any pattern kind in the given colour.
SearchOutcome find_mono_pattern(const TwoColoring& c, const Pattern& p, Color color,
                                 const SearchLimits& limits = {});

struct FreenessReport {
  bool free = false;
  // kind free when both searches fail, otherwise the monochromatic witness.
  Certificate certificate;
  SearchStats red_stats;
  SearchStats blue_stats;
};

FreenessReport verify_free(const TwoColoring& c, const Pattern& red, const Pattern& blue,
                           const SearchLimits& limits = {});

struct IndependenceResult {
  int alpha = 0;
  Certificate certificate;
};

IndependenceResult independence_number(const Hypergraph& h, const SearchLimits& limits = {});

// Two edges sharing exactly one vertex, if any (indices into h.edges()).
std::optional<std::pair<std::size_t, std::size_t>> has_two_edge_loose_path(const Hypergraph& h);

// Transitive subtournament on chi vertices listed source first.
std::optional<std::vector<int>> find_transitive_subtournament(const Tournament& t, int chi);
// Size of the largest transitive subtournament.
int largest_transitive_subtournament(const Tournament& t);

// Single-pass validators used by check_certificate.
CheckResult validate_mono_path(const TwoColoring& c, int ell, const std::vector<Vertex>& sequence, Color color);
CheckResult validate_mono_cycle(const TwoColoring& c, int ell, const std::vector<Vertex>& sequence, Color color);
CheckResult validate_embedding(const TwoColoring& c, const Hypergraph& h, const std::vector<Vertex>& mapping,
                               Color color);
CheckResult validate_independent_set(const Hypergraph& h, const std::vector<Vertex>& set);
CheckResult validate_transitive(const Tournament& t, const std::vector<int>& order);

}  // namespace rgood
