#include "rgood/exact.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>

#include "embedding.hpp"
#include "rgood/colex.hpp"
#include "rgood/constructions.hpp"
#include "rgood/error.hpp"
#include "rgood/parallel.hpp"
#include "rgood/search.hpp"

namespace rgood {

namespace {

// Calls f(order) for every ordering that permutes vertices only within the
// consecutive cells of `order` delimited by `cell_end` (exclusive ends).
void for_each_cell_permutation(std::vector<int> order, const std::vector<int>& cell_end,
                               const std::function<void(const std::vector<int>&)>& f) {
  std::function<void(std::size_t, int)> rec = [&](std::size_t cell, int begin) {
    if (cell == cell_end.size()) {
      f(order);
      return;
    }
    const int end = cell_end[cell];
    std::sort(order.begin() + begin, order.begin() + end);
    do {
      rec(cell + 1, end);
    } while (std::next_permutation(order.begin() + begin, order.begin() + end));
  };
  rec(0, 0);
}

// Sorts vertices by key and returns the order plus the cell boundaries.
template <typename Key>
std::pair<std::vector<int>, std::vector<int>> cells_by_key(const std::vector<Key>& keys) {
  std::vector<int> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<int> ends;
  for (std::size_t i = 1; i <= order.size(); ++i)
    if (i == order.size() || keys[order[i]] != keys[order[i - 1]]) ends.push_back(static_cast<int>(i));
  return {order, ends};
}

std::vector<VertexMask> ksets_of(int n, int k) {
  std::vector<VertexMask> sets;
  for_each_kset(n, k, [&](const KSet& s) { sets.push_back(to_mask(s)); });
  return sets;
}

TwoColoring coloring_from_bits(int k, int n, std::uint64_t bits) {
  TwoColoring c(k, n);
  for (std::uint64_t r = 0; r < c.num_subsets(); ++r)
    if ((bits >> r) & 1U) c.set_at(r, Color::kRed);
  return c;
}

Tournament tournament_from_bits(int n, std::uint64_t bits) {
  Tournament t(n);
  int pos = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++pos) {
      if ((bits >> pos) & 1U)
        t.orient(i, j);
      else
        t.orient(j, i);
    }
  return t;
}

// Extends free colourings on n-1 vertices by vertex n-1, pruning as soon as a
// monochromatic target copy through the new vertex appears among the
// decided k-sets.
class ColoringExtender {
 public:
  ColoringExtender(const Pattern& red, const Pattern& blue, int k, int n)
      : red_(red.hypergraph()), blue_(blue.hypergraph()), red_plan_(detail::plan_embedding(red_)),
        blue_plan_(detail::plan_embedding(blue_)), k_(k), n_(n), old_count_(binomial(n - 1, k)),
        new_count_(binomial(n, k)) {}

  std::vector<std::uint64_t> children(std::uint64_t parent, std::uint64_t& nodes) const {
    std::vector<std::uint64_t> out;
    assign(old_count_, parent, nodes, out);
    return out;
  }

 private:
  void assign(std::uint64_t rank, std::uint64_t bits, std::uint64_t& nodes, std::vector<std::uint64_t>& out) const {
    ++nodes;
    if (rank == new_count_) {
      // Targets with isolated vertices can appear without a new k-set.
      if (has_copy_through_new_vertex(Color::kRed, bits, rank) || has_copy_through_new_vertex(Color::kBlue, bits, rank))
        return;
      out.push_back(canonical_coloring_bits(k_, n_, bits));
      return;
    }
    for (Color color : {Color::kBlue, Color::kRed}) {
      const std::uint64_t next = color == Color::kRed ? bits | (std::uint64_t{1} << rank) : bits;
      if (has_copy_through_new_vertex(color, next, rank + 1)) continue;
      assign(rank + 1, next, nodes, out);
    }
  }

  bool has_copy_through_new_vertex(Color color, std::uint64_t bits, std::uint64_t decided) const {
    const Hypergraph& h = color == Color::kRed ? red_ : blue_;
    const detail::EmbeddingPlan& plan = color == Color::kRed ? red_plan_ : blue_plan_;
    if (h.order() > n_) return false;
    const VertexMask fresh = VertexMask{1} << (n_ - 1);
    const VertexMask old = fresh - 1;
    const bool want_red = color == Color::kRed;
    auto edge_ok = [bits, decided, want_red](VertexMask mask) {
      const std::uint64_t r = colex_rank_mask(mask);
      return r < decided && (((bits >> r) & 1U) != 0) == want_red;
    };
    for (int u = 0; u < h.order(); ++u) {
      std::vector<VertexMask> domains(h.order(), old);
      domains[u] = fresh;
      detail::Embedder embedder(plan, n_, edge_ok, std::move(domains), 0);
      if (embedder.run()) return true;
    }
    return false;
  }

  Hypergraph red_;
  Hypergraph blue_;
  detail::EmbeddingPlan red_plan_;
  detail::EmbeddingPlan blue_plan_;
  int k_;
  int n_;
  std::uint64_t old_count_;
  std::uint64_t new_count_;
};

}  // namespace

std::uint64_t canonical_coloring_bits(int k, int n, std::uint64_t red_bits) {
  const auto sets = ksets_of(n, k);
  require(sets.size() <= 64, "canonical_coloring_bits: C(n,k) exceeds 64");
  std::vector<int> degree(n, 0);
  std::vector<std::vector<int>> codegree(n, std::vector<int>(n, 0));
  for (std::size_t r = 0; r < sets.size(); ++r) {
    if (!((red_bits >> r) & 1U)) continue;
    const KSet s = from_mask(sets[r]);
    for (Vertex a : s) {
      ++degree[a];
      for (Vertex b : s)
        if (a != b) ++codegree[a][b];
    }
  }
  std::vector<std::pair<int, std::vector<int>>> keys(n);
  for (int v = 0; v < n; ++v) {
    auto row = codegree[v];
    row.erase(row.begin() + v);
    std::sort(row.begin(), row.end());
    keys[v] = {degree[v], std::move(row)};
  }
  const auto [order, ends] = cells_by_key(keys);
  std::uint64_t best = ~std::uint64_t{0};
  bool first = true;
  std::vector<int> position(n);
  for_each_cell_permutation(order, ends, [&](const std::vector<int>& ord) {
    for (int i = 0; i < n; ++i) position[ord[i]] = i;
    std::uint64_t image = 0;
    for (std::size_t r = 0; r < sets.size(); ++r) {
      if (!((red_bits >> r) & 1U)) continue;
      VertexMask m = 0;
      for (VertexMask s = sets[r]; s; s &= s - 1) m |= VertexMask{1} << position[__builtin_ctzll(s)];
      image |= std::uint64_t{1} << colex_rank_mask(m);
    }
    if (first || image < best) {
      best = image;
      first = false;
    }
  });
  return best;
}

RamseyResult ramsey_exact(const Pattern& red, const Pattern& blue, int n_cap, const ExactOptions& options) {
  require(red.uniformity() == blue.uniformity(), "ramsey_exact: patterns differ in uniformity");
  require(n_cap >= 0, "ramsey_exact: negative cap");
  const int k = red.uniformity();
  RamseyResult result;
  result.lower_bound = 1;
  result.lower_witness = TwoColoring(k, 0);
  std::vector<std::uint64_t> level{0};
  for (int n = 1; n <= n_cap; ++n) {
    if (binomial(n, k) > 64) {
      result.note = "stopped before " + std::to_string(n) + " vertices: C(n,k) exceeds 64";
      return result;
    }
    if (options.node_budget != 0 && result.stats.nodes > options.node_budget) {
      result.note = "node budget exhausted before " + std::to_string(n) + " vertices";
      return result;
    }
    const ColoringExtender extender(red, blue, k, n);
    std::vector<std::vector<std::uint64_t>> children(level.size());
    std::vector<std::uint64_t> nodes(level.size(), 0);
    parallel_for(level.size(), options.jobs, [&](std::size_t i) { children[i] = extender.children(level[i], nodes[i]); });
    std::vector<std::uint64_t> next;
    LevelStat stat;
    stat.order = n;
    for (std::size_t i = 0; i < level.size(); ++i) {
      next.insert(next.end(), children[i].begin(), children[i].end());
      stat.nodes += nodes[i];
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    stat.classes = next.size();
    result.stats.nodes += stat.nodes;
    result.levels.push_back(stat);
    if (next.empty()) {
      result.exact = true;
      result.value = n;
      return result;
    }
    level = std::move(next);
    result.lower_bound = n + 1;
    result.lower_witness = coloring_from_bits(k, n, level.front());
  }
  result.note = "reached the cap of " + std::to_string(n_cap) + " vertices";
  return result;
}

namespace {

// Least independence number over connected spanning families of k-sets of
// [c] in which no two edges share exactly one vertex. Returns the family.
std::pair<int, Hypergraph> min_alpha_component(int k, int c, SearchStats& stats) {
  const auto sets = ksets_of(c, k);
  const int m = static_cast<int>(sets.size());
  std::vector<std::uint64_t> compatible(m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && popcount(sets[a] & sets[b]) != 1) compatible[a] |= std::uint64_t{1} << b;
  const VertexMask all = c == 64 ? ~VertexMask{0} : ((VertexMask{1} << c) - 1);
  int best = -1;
  std::uint64_t best_family = 0;
  auto consider = [&](std::uint64_t family) {
    VertexMask cover = 0;
    std::vector<VertexMask> edges;
    for (std::uint64_t f = family; f; f &= f - 1) {
      edges.push_back(sets[__builtin_ctzll(f)]);
      cover |= edges.back();
    }
    if (cover != all) return;
    VertexMask reached = edges.front();
    for (bool grew = true; grew;) {
      grew = false;
      for (VertexMask e : edges)
        if ((e & reached) && (e & ~reached)) {
          reached |= e;
          grew = true;
        }
    }
    if (reached != all) return;
    // Largest independent set by subset enumeration (c is small here).
    int alpha = 0;
    for (VertexMask s = 0; s <= all; ++s) {
      const int size = popcount(s);
      if (size <= alpha) continue;
      bool independent = true;
      for (VertexMask e : edges)
        if ((e & s) == e) {
          independent = false;
          break;
        }
      if (independent) alpha = size;
    }
    if (best < 0 || alpha < best) {
      best = alpha;
      best_family = family;
    }
  };
  // Bron-Kerbosch with pivoting over the compatibility graph.
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> bk = [&](std::uint64_t r, std::uint64_t p,
                                                                            std::uint64_t x) {
    ++stats.nodes;
    if (p == 0 && x == 0) {
      if (r != 0) consider(r);
      return;
    }
    const std::uint64_t px = p | x;
    int pivot = __builtin_ctzll(px);
    int best_cover = -1;
    for (std::uint64_t s = px; s; s &= s - 1) {
      const int u = __builtin_ctzll(s);
      const int cover = __builtin_popcountll(p & compatible[u]);
      if (cover > best_cover) {
        best_cover = cover;
        pivot = u;
      }
    }
    for (std::uint64_t cand = p & ~compatible[pivot]; cand; cand &= cand - 1) {
      const int v = __builtin_ctzll(cand);
      const std::uint64_t bit = std::uint64_t{1} << v;
      bk(r | bit, p & compatible[v], x & compatible[v]);
      p &= ~bit;
      x |= bit;
    }
  };
  const std::uint64_t everything = m == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
  bk(0, everything, 0);
  std::vector<KSet> edges;
  for (std::uint64_t f = best_family; f; f &= f - 1) edges.push_back(from_mask(sets[__builtin_ctzll(f)]));
  return {best, Hypergraph(k, c, edges)};
}

}  // namespace

TauResult tau_exact(int k, int alpha, int n_cap) {
  require(k >= 2 && alpha >= 1, "tau_exact needs k >= 2 and alpha >= 1");
  TauResult result;
  if (alpha < k) {
    result.exact = true;
    result.trivial_regime = true;
    result.value = result.lower = result.upper = alpha - 1;
    result.witness = Hypergraph(k, alpha - 1, {});
    result.note = alpha == 1 ? "alpha = 1: only the empty hypergraph qualifies" : "alpha < k";
    return result;
  }
  const int upper = 2 * alpha - 2;
  const int largest = std::min(upper, n_cap);
  result.upper = upper;
  result.min_alpha.assign(largest + 1, -1);
  std::map<int, Hypergraph> components;
  bool complete = largest == upper;
  for (int c = k; c <= largest; ++c) {
    if (binomial(c, k) > 64) {
      complete = false;
      result.note = "components on " + std::to_string(c) + " or more vertices exceed the 64-edge enumeration limit";
      break;
    }
    auto [a, family] = min_alpha_component(k, c, result.stats);
    result.min_alpha[c] = a;
    if (a >= 0) components.emplace(c, std::move(family));
  }
  // Unbounded knapsack: maximise vertices subject to total independence <= alpha-1.
  const int capacity = alpha - 1;
  std::vector<int> best(capacity + 1, 0);
  std::vector<int> choice(capacity + 1, 0);  // component order; 1 = isolated vertex
  for (int cap = 1; cap <= capacity; ++cap) {
    best[cap] = best[cap - 1] + 1;
    choice[cap] = 1;
    for (const auto& [c, family] : components) {
      const int a = result.min_alpha[c];
      if (a <= cap && best[cap - a] + c > best[cap]) {
        best[cap] = best[cap - a] + c;
        choice[cap] = c;
      }
    }
  }
  Hypergraph witness(k, 0, {});
  for (int cap = capacity; cap > 0;) {
    const int c = choice[cap];
    if (c == 1) {
      witness = witness.with_order(witness.order() + 1);
      cap -= 1;
    } else {
      witness = witness.disjoint_union(components.at(c));
      cap -= result.min_alpha[c];
    }
  }
  SearchLimits limits;
  limits.max_vertices = std::max(witness.order(), default_independence_guard());
  if (has_two_edge_loose_path(witness) || independence_number(witness, limits).alpha >= alpha)
    throw InternalError("tau_exact: assembled witness fails its defining properties");
  const int construction = tau_lower_construction(k, alpha).graph.order();
  result.witness = witness;
  result.exact = complete;
  result.value = best[capacity];
  result.lower = std::max(best[capacity], construction);
  if (complete) result.upper = result.value;
  return result;
}

std::uint64_t canonical_tournament_bits(const Tournament& t) {
  const int n = t.order();
  require(n <= 11, "canonical_tournament_bits: at most 11 vertices");
  std::vector<int> score(n);
  for (int v = 0; v < n; ++v) score[v] = __builtin_popcount(t.out_mask(v));
  std::vector<std::pair<int, std::vector<int>>> keys(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> out_scores;
    for (std::uint32_t m = t.out_mask(v); m; m &= m - 1) out_scores.push_back(score[__builtin_ctz(m)]);
    std::sort(out_scores.begin(), out_scores.end());
    keys[v] = {score[v], std::move(out_scores)};
  }
  const auto [order, ends] = cells_by_key(keys);
  std::uint64_t best = 0;
  bool first = true;
  std::vector<int> position(n);
  for_each_cell_permutation(order, ends, [&](const std::vector<int>& ord) {
    for (int i = 0; i < n; ++i) position[ord[i]] = i;
    const std::uint64_t bits = t.relabelled(position).arc_bits();
    if (first || bits < best) {
      best = bits;
      first = false;
    }
  });
  return best;
}

DirectedRamseyResult directed_ramsey_exact(int chi, int n_cap, const ExactOptions& options) {
  require(chi >= 1, "directed_ramsey_exact needs chi >= 1");
  require(n_cap >= 0 && n_cap <= 11, "directed_ramsey_exact: cap must lie in [0, 11]");
  DirectedRamseyResult result;
  result.witness = Tournament(0);
  std::vector<std::uint64_t> level{0};
  for (int n = 1; n <= n_cap; ++n) {
    std::vector<std::vector<std::uint64_t>> children(level.size());
    std::vector<std::uint64_t> nodes(level.size(), 0);
    parallel_for(level.size(), options.jobs, [&](std::size_t i) {
      const Tournament parent = tournament_from_bits(n - 1, level[i]);
      for (std::uint32_t out = 0; out < (std::uint32_t{1} << (n - 1)); ++out) {
        ++nodes[i];
        const Tournament child = parent.extended(out);
        if (find_transitive_subtournament(child, chi)) continue;
        children[i].push_back(canonical_tournament_bits(child));
      }
    });
    std::vector<std::uint64_t> next;
    LevelStat stat;
    stat.order = n;
    for (std::size_t i = 0; i < level.size(); ++i) {
      next.insert(next.end(), children[i].begin(), children[i].end());
      stat.nodes += nodes[i];
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    stat.classes = next.size();
    result.levels.push_back(stat);
    if (next.empty()) {
      result.exact = true;
      result.value = n;
      return result;
    }
    level = std::move(next);
    result.witness = tournament_from_bits(n, level.front());
  }
  result.value = n_cap + 1;
  result.note = "every order up to the cap admits a TT-free tournament; value is a lower bound";
  return result;
}

Tournament augment_tournament(const Tournament& t) {
  const int n = t.order();
  const std::uint32_t everyone = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  const Tournament with_source = t.extended(everyone);
  return with_source.extended(std::uint32_t{1} << n);
}

GapCheck consecutive_gap_check(int chi, int n_cap, const ExactOptions& options) {
  require(chi >= 3, "consecutive_gap_check needs chi >= 3");
  GapCheck check;
  check.chi = chi;
  const auto current = directed_ramsey_exact(chi, n_cap, options);
  const auto previous = directed_ramsey_exact(chi - 1, n_cap, options);
  if (!current.exact || !previous.exact)
    throw GuardExceeded("consecutive_gap_check: directed Ramsey values not determined within the cap");
  check.value = current.value;
  check.previous = previous.value;
  check.inequality_holds = current.value >= previous.value + 2;
  check.augmented = augment_tournament(previous.witness);
  check.augmented_free = check.augmented.order() == previous.value + 1 &&
                         !find_transitive_subtournament(check.augmented, chi).has_value();
  check.ok = check.inequality_holds && check.augmented_free;
  return check;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kGood:
      return "good";
    case Verdict::kNotGood:
      return "not-good";
    case Verdict::kUndecided:
      return "undecided";
  }
  return "undecided";
}

GapReport goodness_gap(const Pattern& g, const Hypergraph& h, long long verified_lower,
                       std::optional<long long> upper) {
  const auto profile = ramsey_profile(h);
  const auto burr = burr_bound(g.order(), profile);
  GapReport report;
  report.burr = burr.value;
  report.burr_hypothesis = burr.hypothesis_holds;
  report.lower = verified_lower + 1;
  report.upper = upper;
  report.exact = upper.has_value() && *upper == report.lower;
  if (report.exact) report.value = report.lower;
  report.gap = report.lower - report.burr;
  if (report.lower > report.burr)
    report.verdict = Verdict::kNotGood;
  else if (report.exact && report.value == report.burr)
    report.verdict = Verdict::kGood;
  else
    report.verdict = Verdict::kUndecided;
  return report;
}

GapReport goodness_gap(const Pattern& g, const Hypergraph& h, const RamseyResult& ramsey) {
  if (ramsey.exact) return goodness_gap(g, h, ramsey.value - 1, ramsey.value);
  return goodness_gap(g, h, ramsey.lower_bound - 1, std::nullopt);
}

}  // namespace rgood
