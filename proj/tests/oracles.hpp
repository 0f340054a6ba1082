#pragma once

// Brute-force reference implementations. They share no search code with the
// library: every quantity is recomputed by plain enumeration.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "rgood/colex.hpp"
#include "rgood/coloring.hpp"
#include "rgood/hypergraph.hpp"
#include "rgood/tournament.hpp"

namespace oracle {

using rgood::Color;
using rgood::Hypergraph;
using rgood::TwoColoring;
using rgood::Vertex;

// Colour of a k-set by linear scan over the colex enumeration.
inline Color color_of(const TwoColoring& c, std::vector<Vertex> s) {
  std::sort(s.begin(), s.end());
  return c.color(s);
}

// Sequences of `length` distinct vertices of [n] in lexicographic order, each
// prefix extended only while `keep(prefix)` holds. f returns true to stop.
inline void for_each_sequence(int n, int length, const std::function<bool(const std::vector<Vertex>&)>& f,
                              const std::function<bool(const std::vector<Vertex>&)>& keep = {}) {
  std::vector<Vertex> seq;
  std::vector<bool> used(n, false);
  bool stop = false;
  std::function<void()> rec = [&] {
    if (stop) return;
    if (static_cast<int>(seq.size()) == length) {
      stop = f(seq);
      return;
    }
    for (int v = 0; v < n && !stop; ++v) {
      if (used[v]) continue;
      used[v] = true;
      seq.push_back(v);
      if (!keep || keep(seq)) rec();
      seq.pop_back();
      used[v] = false;
    }
  };
  rec();
}

// Edges of the ell-path (or cycle) laid along seq.
inline std::vector<std::vector<Vertex>> path_edges(const std::vector<Vertex>& seq, int k, int ell, bool cycle) {
  const int step = k - ell;
  const int p = static_cast<int>(seq.size());
  std::vector<std::vector<Vertex>> out;
  if (cycle) {
    for (int s = 0; s < p; s += step) {
      std::vector<Vertex> e;
      for (int i = 0; i < k; ++i) e.push_back(seq[(s + i) % p]);
      out.push_back(e);
    }
  } else {
    for (int s = 0; s + k <= p; s += step) out.emplace_back(seq.begin() + s, seq.begin() + s + k);
  }
  return out;
}

inline bool sequence_is_mono(const TwoColoring& c, const std::vector<Vertex>& seq, int ell, bool cycle, Color col) {
  for (const auto& e : path_edges(seq, c.uniformity(), ell, cycle))
    if (color_of(c, e) != col) return false;
  return true;
}

// Prefix filter: the path edge ending at the last position, if any, has colour col.
inline std::function<bool(const std::vector<Vertex>&)> path_prefix_filter(const TwoColoring& c, int ell,
                                                                          Color col) {
  const int k = c.uniformity();
  const int step = k - ell;
  return [&c, k, step, col](const std::vector<Vertex>& seq) {
    const int len = static_cast<int>(seq.size());
    if (len < k || (len - k) % step != 0) return true;
    return color_of(c, std::vector<Vertex>(seq.end() - k, seq.end())) == col;
  };
}

// Monochromatic ell-path on exactly `vertices` vertices.
inline bool has_mono_path(const TwoColoring& c, int ell, int vertices, Color col) {
  if (vertices > c.order()) return false;
  bool found = false;
  for_each_sequence(
      c.order(), vertices,
      [&](const std::vector<Vertex>& seq) {
        found = sequence_is_mono(c, seq, ell, false, col);
        return found;
      },
      path_prefix_filter(c, ell, col));
  return found;
}

inline bool has_mono_cycle(const TwoColoring& c, int ell, int vertices, Color col) {
  if (vertices > c.order()) return false;
  bool found = false;
  for_each_sequence(
      c.order(), vertices,
      [&](const std::vector<Vertex>& seq) {
        found = sequence_is_mono(c, seq, ell, true, col);
        return found;
      },
      path_prefix_filter(c, ell, col));
  return found;
}

// Largest vertex count of a monochromatic ell-path with at least one edge, else ell.
inline int longest_mono_path(const TwoColoring& c, int ell, Color col) {
  const int k = c.uniformity();
  int best = ell;
  for (int v = k; v <= c.order(); v += k - ell)
    if (has_mono_path(c, ell, v, col)) best = v;
  return best;
}

// Injective map of h into [n] with every edge of colour col; edges are checked
// as soon as their largest pattern vertex is placed.
inline bool has_mono_copy(const TwoColoring& c, const Hypergraph& h, Color col) {
  if (h.order() > c.order()) return false;
  std::vector<std::vector<std::vector<Vertex>>> closing(h.order() + 1);
  for (const auto& e : h.edges()) closing[*std::max_element(e.begin(), e.end()) + 1].push_back(e);
  auto edges_ok = [&](const std::vector<Vertex>& map) {
    for (const auto& e : closing[map.size()]) {
      std::vector<Vertex> img;
      for (Vertex u : e) img.push_back(map[u]);
      if (color_of(c, img) != col) return false;
    }
    return true;
  };
  bool found = false;
  for_each_sequence(
      c.order(), h.order(),
      [&](const std::vector<Vertex>&) {
        found = true;
        return true;
      },
      edges_ok);
  return found || h.order() == 0;
}

// Largest vertex set containing no edge.
inline int independence_number(const Hypergraph& h) {
  const int n = h.order();
  int best = 0;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    bool ok = true;
    for (const auto& e : h.edges()) {
      bool inside = true;
      for (Vertex v : e) inside = inside && ((s >> v) & 1U);
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

// Two edges meeting in exactly one vertex.
inline bool has_two_edge_loose_path(const Hypergraph& h) {
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = i + 1; j < h.size(); ++j) {
      int common = 0;
      for (Vertex a : h.edge(i))
        for (Vertex b : h.edge(j)) common += a == b;
      if (common == 1) return true;
    }
  return false;
}

// Chromatic number and least class size over optimal proper colourings.
struct Profile {
  int chi = 0;
  int sigma = 0;
};

inline Profile profile(const Hypergraph& h) {
  const int n = h.order();
  for (int colors = 1; colors <= n; ++colors) {
    int best_sigma = -1;
    std::vector<int> col(n, 0);
    std::function<void(int)> rec = [&](int v) {
      if (v == n) {
        for (const auto& e : h.edges()) {
          bool mono = true;
          for (Vertex u : e) mono = mono && col[u] == col[e[0]];
          if (mono) return;
        }
        std::vector<int> sizes(colors, 0);
        for (int x : col) ++sizes[x];
        if (*std::min_element(sizes.begin(), sizes.end()) == 0) return;
        const int s = *std::min_element(sizes.begin(), sizes.end());
        if (best_sigma < 0 || s < best_sigma) best_sigma = s;
        return;
      }
      for (int x = 0; x < colors; ++x) {
        col[v] = x;
        rec(v + 1);
      }
    };
    rec(0);
    if (best_sigma >= 0) return {colors, best_sigma};
  }
  return {n, 1};
}

// Transitive subtournament on chi vertices: some chi-set with scores 0..chi-1.
inline bool has_transitive(const rgood::Tournament& t, int chi) {
  const int n = t.order();
  if (chi > n) return false;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    if (__builtin_popcount(s) != chi) continue;
    std::vector<int> scores;
    for (int v = 0; v < n; ++v) {
      if (!((s >> v) & 1U)) continue;
      int out = 0;
      for (int u = 0; u < n; ++u)
        if (u != v && ((s >> u) & 1U) && t.has_arc(v, u)) ++out;
      scores.push_back(out);
    }
    std::sort(scores.begin(), scores.end());
    bool transitive = true;
    for (int i = 0; i < chi; ++i) transitive = transitive && scores[i] == i;
    if (transitive) return true;
  }
  return false;
}

// Tournament on n vertices from arc bits over pairs i<j in lexicographic order.
inline rgood::Tournament tournament_from_code(int n, std::uint64_t code) {
  std::vector<std::pair<int, int>> arcs;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((code >> bit) & 1U)
        arcs.emplace_back(i, j);
      else
        arcs.emplace_back(j, i);
    }
  return rgood::Tournament::from_arcs(n, arcs);
}

// Colouring of all k-subsets of [n] from a bit code in colex-rank order.
inline TwoColoring coloring_from_code(int k, int n, std::uint64_t code) {
  TwoColoring c(k, n);
  for (std::uint64_t r = 0; r < c.num_subsets(); ++r)
    if ((code >> r) & 1U) c.set_at(r, Color::kRed);
  return c;
}

inline TwoColoring random_coloring(int k, int n, double red_prob, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(red_prob);
  TwoColoring c(k, n);
  for (std::uint64_t r = 0; r < c.num_subsets(); ++r)
    if (coin(rng)) c.set_at(r, Color::kRed);
  return c;
}

// Edge sets (as rank masks) of every copy of h in K_n^(3).
inline std::vector<std::uint64_t> copy_masks(const Hypergraph& h, int n) {
  std::set<std::uint64_t> masks;
  if (h.order() > n) return {};
  for_each_sequence(n, h.order(), [&](const std::vector<Vertex>& map) {
    std::uint64_t m = 0;
    for (const auto& e : h.edges()) {
      rgood::KSet img;
      for (Vertex u : e) img.push_back(map[u]);
      std::sort(img.begin(), img.end());
      m |= std::uint64_t{1} << rgood::colex_rank(img);
    }
    masks.insert(m);
    return false;
  });
  return {masks.begin(), masks.end()};
}

// Least n such that every colouring of K_n^(3) has red g or blue h.
inline int ramsey(const Hypergraph& g, const Hypergraph& h) {
  for (int n = 3;; ++n) {
    const auto red = copy_masks(g, n);
    const auto blue = copy_masks(h, n);
    const std::uint64_t total = rgood::binomial(n, 3);
    const std::uint64_t all = total == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << total) - 1;
    bool every = true;
    for (std::uint64_t code = 0; code <= all && every; ++code) {
      bool hit = false;
      for (auto m : red)
        if ((m & ~code) == 0) {
          hit = true;
          break;
        }
      if (!hit)
        for (auto m : blue)
          if ((m & code) == 0) {
            hit = true;
            break;
          }
      every = hit;
    }
    if (every) return n;
  }
}

// Largest n with a k-graph on n vertices, independence below alpha, no two-edge loose path.
inline int tau(int k, int alpha, int n_max) {
  int best = 0;
  for (int n = 0; n <= n_max; ++n) {
    const std::uint64_t slots = rgood::binomial(n, k);
    bool exists = false;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << slots) && !exists; ++code) {
      std::vector<rgood::KSet> edges;
      for (std::uint64_t r = 0; r < slots; ++r)
        if ((code >> r) & 1U) edges.push_back(rgood::colex_unrank(r, k, n));
      const Hypergraph h(k, n, edges);
      if (has_two_edge_loose_path(h)) continue;
      exists = independence_number(h) < alpha;
    }
    if (exists) best = n;
  }
  return best;
}


// Transitive subtournament on chi vertices inside `set`, from out-neighbour masks.
inline bool transitive_in(const std::vector<std::uint32_t>& out, std::uint32_t set, int chi) {
  if (chi <= 0) return true;
  for (std::uint32_t rest = set; rest; rest &= rest - 1) {
    const int v = __builtin_ctz(rest);
    if (chi == 1 || transitive_in(out, out[v] & set, chi - 1)) return true;
  }
  return false;
}

// Whether every tournament on n vertices contains a transitive one on chi,
// visiting all 2^C(n,2) arc codes in Gray-code order.
inline bool every_tournament_has_transitive(int n, int chi) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<std::uint32_t> out(n, 0);
  for (auto [i, j] : pairs) out[j] |= 1U << i;
  const std::uint32_t all = n == 32 ? ~0U : (1U << n) - 1;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t step = 0; step < total; ++step) {
    if (step > 0) {
      const auto [i, j] = pairs[__builtin_ctzll(step)];
      out[i] ^= 1U << j;
      out[j] ^= 1U << i;
    }
    if (!transitive_in(out, all, chi)) return false;
  }
  return true;
}

}  // namespace oracle
