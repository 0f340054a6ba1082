#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rgood/certificate.hpp"
#include "rgood/chains.hpp"
#include "rgood/coloring.hpp"
#include "rgood/hypergraph.hpp"
#include "rgood/json_io.hpp"
#include "rgood/search.hpp"
#include "rgood/tournament.hpp"

namespace rgood {

struct CrossingDichotomy {
  // First red k-set (colex order over the union) not inside a single block.
  std::optional<KSet> red_edge;
  // Every crossing k-set is blue (vacuous for fewer than two blocks).
  bool all_blue = false;
  std::uint64_t checked = 0;
};

// Scans the k-sets of the union of disjoint, equal-size blocks that meet at
// least two blocks.
CrossingDichotomy independence_dichotomy(const TwoColoring& c, const std::vector<std::vector<Vertex>>& blocks);

// Blue embedding of h sending class i of `h_classes` into blocks[i], validated.
// Nothing when a class does not fit or the image has a red edge.
std::optional<Certificate> partite_embedding(const TwoColoring& c, const Hypergraph& h,
                                             const std::vector<std::vector<Vertex>>& h_classes,
                                             const std::vector<std::vector<Vertex>>& blocks, Color color);

// Two-coloured complete bipartite graph: bit j of black[i] is set iff the edge
// (left i, right j) is black. right <= 64.
struct BipartiteColoring {
  int left = 0;
  int right = 0;
  std::vector<std::uint64_t> black;
};

struct Biclique {
  bool black = true;
  std::vector<int> left;
  std::vector<int> right;
};

// Monochromatic K_{t,t}, black first, then white; left subsets in lexicographic
// order, right side the lowest t common neighbours.
std::optional<Biclique> monochromatic_biclique(const BipartiteColoring& g, int t);

struct ButterflyResult {
  // Red tight path w a b w' with w, a in one W-set and b, w' in another.
  std::optional<Certificate> red_path;
  // Blue H(TT_chi, m).
  std::optional<Certificate> blue;
  // Reduced W'-sets and the tournament they induce (when the reduction ran).
  std::vector<std::vector<Vertex>> reduced;
  std::optional<Tournament> reduced_tournament;
  std::string diagnostic;
};

// 3-uniform only. `w_sets[i]` must lie in blocks[i]; an empty list selects the
// blocks themselves. The reduced tournament orients i -> j (i < j) when the
// pair block is white and j -> i when black, so that arc (x, y) carries blue
// edges with two vertices in W'_x.
ButterflyResult butterfly_dichotomy(const TwoColoring& c, const std::vector<std::vector<Vertex>>& blocks,
                                    const std::vector<std::vector<Vertex>>& w_sets, int chi, int m,
                                    int min_w_size = 0);

// Ratio of triples {a, b, z} of distinct vertices, a, b in x and z in y, that
// receive `color`, counted over ordered pairs a != b.
double triple_density(const TwoColoring& c, const std::vector<Vertex>& x, const std::vector<Vertex>& y,
                      Color color);

struct RandomEmbedReport {
  std::optional<Certificate> witness;
  int trials_used = 0;
  // Trials rejected for a repeated vertex, and for a red edge.
  int collisions = 0;
  int red_hits = 0;
  // C(chi,2) m^3 * 2 gamma, and chi^2 m^3 gamma.
  double union_bound = 0.0;
  double coarse_bound = 0.0;
  // Blue density of each arc (i, j), i < j.
  std::vector<double> densities;
};

// Classes V_0 = a, V_s = ys[s-1] of H(TT_chi, m) with chi = ys.size() + 1,
// arcs i -> j for i < j. Throws InvalidInput when a class is smaller than
// 1/gamma or an arc density is below 1 - gamma.
RandomEmbedReport random_embed(const TwoColoring& c, const std::vector<Vertex>& a,
                               const std::vector<std::vector<Vertex>>& ys, int m, double gamma, int trials,
                               std::uint64_t seed);

// Uniform integer in [0, bound) from a 64-bit generator by rejection.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Simple graph on 0..n-1 (n <= 64) as adjacency masks.
struct SimpleGraph {
  int n = 0;
  std::vector<VertexMask> adj;
  void add_edge(int a, int b);
  long long edge_count() const;
};

// Path with `length` edges (length + 1 distinct vertices), or nothing. Throws
// GuardExceeded when the node budget runs out.
std::optional<std::vector<int>> erdos_gallai_path(const SimpleGraph& g, int length, std::uint64_t node_budget = 0);

struct AbsorbingResult {
  // a_1 a_2 b_1 a_3 a_4 ... b_d a_{2d+1} a_{2d+2}.
  std::optional<std::vector<Vertex>> path;
  std::vector<Vertex> b_choice;
  // Auxiliary graph on a: pairs red with every chosen b.
  long long aux_edges = 0;
  // aux_edges > d |a|.
  bool bound_holds = false;
  double red_density = 0.0;
  std::string diagnostic;
};

// 3-uniform. Requires a, b disjoint, a a red clique, |b| >= d and red density
// d_r(a, a, b) >= eta; with threshold_scale > 0 also |a| >= scale * 4d e^d / eta^d
// and |b| >= scale * d / eta. The returned path is validated.
AbsorbingResult absorbing_block(const TwoColoring& c, const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                                int d, double eta, double threshold_scale = 0.0);

// Tunable scale of the engines.
struct EngineParams {
  // Order of the red path or cycle sought.
  int target = 0;
  bool cycle = false;
  // Red clique size for the partition.
  int block_size = 4;
  // Connector share of each block; negative selects 0.5 (loose) or 1.0 (tight).
  double epsilon = -1.0;
  // Absorbing-block length and density threshold.
  int d = 1;
  double gamma = 0.1;
  // Class size of the auxiliary blue H(TT_{chi-1}, q).
  int q = 2;
  int trials = 10;
  std::uint64_t seed = 0;
  int max_rounds = 64;
  SearchLimits limits;
};

EngineParams engine_params_from_json(const Json& j);
Json engine_params_to_json(const EngineParams& params);

struct EngineCheck {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
};

struct EngineReport {
  enum class Outcome { kRed, kBlue, kStall };
  Outcome outcome = Outcome::kStall;
  std::optional<Certificate> certificate;
  std::string stage;
  std::vector<std::string> log;
  // Inequalities of the upper-bound argument evaluated on this instance.
  std::vector<EngineCheck> checks;
  std::vector<std::string> flags;
  std::vector<std::pair<std::string, long long>> counters;
};

const char* outcome_name(EngineReport::Outcome outcome);
Json engine_report_to_json(const EngineReport& report, const TwoColoring& c);

// Red loose path (or cycle) on params.target vertices, a blue copy of h, or a
// stall report. Witnesses are re-validated before they are returned.
EngineReport loose_witness_engine(const TwoColoring& c, const Hypergraph& h, const EngineParams& params);

// Red tight path (or cycle) on params.target vertices, a blue H(TT_chi, m), or
// a stall report. 3-uniform only.
EngineReport tight_witness_engine(const TwoColoring& c, int chi, int m, const EngineParams& params);

}  // namespace rgood
