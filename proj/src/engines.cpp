#include "rgood/engines.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <tuple>

#include "rgood/error.hpp"
#include "rgood/exact.hpp"
#include "rgood/generators.hpp"
#include "rgood/profile.hpp"

namespace rgood {

namespace {

VertexMask bit(Vertex v) { return VertexMask{1} << v; }

VertexMask mask_of(const std::vector<Vertex>& vs) {
  VertexMask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

std::vector<Vertex> sorted_copy(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  return vs;
}

Color triple_color(const TwoColoring& c, Vertex a, Vertex b, Vertex z) {
  return c.color_of_mask(bit(a) | bit(b) | bit(z));
}

void check_vertices(const TwoColoring& c, const std::vector<Vertex>& vs, const std::string& what) {
  VertexMask seen = 0;
  for (Vertex v : vs) {
    if (v < 0 || v >= c.order()) throw InvalidInput(what + ": vertex " + std::to_string(v) + " out of range");
    if ((seen >> v) & 1U) throw InvalidInput(what + ": vertex " + std::to_string(v) + " repeated");
    seen |= bit(v);
  }
}

void check_disjoint(const TwoColoring& c, const std::vector<std::vector<Vertex>>& sets, const std::string& what) {
  VertexMask all = 0;
  for (const auto& s : sets) {
    check_vertices(c, s, what);
    const VertexMask m = mask_of(s);
    if (all & m) throw InvalidInput(what + ": sets are not disjoint");
    all |= m;
  }
}

bool red_clique(const TwoColoring& c, const std::vector<Vertex>& vs) {
  bool ok = true;
  const auto sorted = sorted_copy(vs);
  for_each_subset_of(std::span<const Vertex>(sorted), c.uniformity(), [&](const KSet& s) {
    if (ok && c.color(s) != Color::kRed) ok = false;
  });
  return ok;
}

Certificate path_cert(int k, int ell, std::vector<Vertex> sequence, Color color) {
  Certificate cert;
  cert.kind = CertificateKind::kRedPath;
  cert.color = color;
  cert.k = k;
  cert.ell = ell;
  cert.sequence = std::move(sequence);
  return cert;
}

Certificate cycle_cert(int k, int ell, std::vector<Vertex> sequence) {
  Certificate cert = path_cert(k, ell, std::move(sequence), Color::kRed);
  cert.kind = CertificateKind::kRedCycle;
  cert.closed = true;
  return cert;
}

Certificate embedding_cert(const TwoColoring& c, const Hypergraph& h, std::vector<Vertex> mapping, Color color) {
  Certificate cert;
  cert.kind = CertificateKind::kBlueEmbedding;
  cert.color = color;
  cert.k = c.uniformity();
  cert.mapping = std::move(mapping);
  cert.pattern = h;
  return cert;
}

}  // namespace

CrossingDichotomy independence_dichotomy(const TwoColoring& c, const std::vector<std::vector<Vertex>>& blocks) {
  check_disjoint(c, blocks, "independence_dichotomy");
  for (const auto& b : blocks)
    require(b.size() == blocks.front().size(), "independence_dichotomy: blocks must have equal size");
  CrossingDichotomy out;
  std::vector<int> block_of(c.order(), -1);
  std::vector<Vertex> all;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (Vertex v : blocks[i]) {
      block_of[v] = static_cast<int>(i);
      all.push_back(v);
    }
  std::sort(all.begin(), all.end());
  for_each_subset_of(std::span<const Vertex>(all), c.uniformity(), [&](const KSet& s) {
    if (out.red_edge) return;
    const int first = block_of[s[0]];
    bool crossing = false;
    for (Vertex v : s) crossing = crossing || block_of[v] != first;
    if (!crossing) return;
    ++out.checked;
    if (c.color(s) == Color::kRed) out.red_edge = s;
  });
  out.all_blue = !out.red_edge;
  return out;
}

std::optional<Certificate> partite_embedding(const TwoColoring& c, const Hypergraph& h,
                                             const std::vector<std::vector<Vertex>>& h_classes,
                                             const std::vector<std::vector<Vertex>>& blocks, Color color) {
  if (h_classes.size() > blocks.size()) return std::nullopt;
  std::vector<Vertex> mapping(h.order(), -1);
  for (std::size_t i = 0; i < h_classes.size(); ++i) {
    if (h_classes[i].size() > blocks[i].size()) return std::nullopt;
    for (std::size_t j = 0; j < h_classes[i].size(); ++j) {
      const Vertex u = h_classes[i][j];
      require(u >= 0 && u < h.order() && mapping[u] < 0, "partite_embedding: classes must partition V(h)");
      mapping[u] = blocks[i][j];
    }
  }
  for (Vertex x : mapping) require(x >= 0, "partite_embedding: classes must cover V(h)");
  if (!validate_embedding(c, h, mapping, color).ok) return std::nullopt;
  return embedding_cert(c, h, std::move(mapping), color);
}

std::optional<Biclique> monochromatic_biclique(const BipartiteColoring& g, int t) {
  require(t >= 1, "monochromatic_biclique: t must be positive");
  require(g.right >= 0 && g.right <= 64 && static_cast<int>(g.black.size()) == g.left,
          "monochromatic_biclique: malformed bipartite colouring");
  if (t > g.left || t > g.right) return std::nullopt;
  const std::uint64_t full = g.right == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.right) - 1);
  for (bool black : {true, false}) {
    std::vector<std::uint64_t> nb(g.left);
    for (int i = 0; i < g.left; ++i) nb[i] = black ? (g.black[i] & full) : (~g.black[i] & full);
    std::vector<int> chosen;
    std::function<bool(int, std::uint64_t)> rec = [&](int from, std::uint64_t common) -> bool {
      if (static_cast<int>(chosen.size()) == t) return true;
      for (int i = from; i <= g.left - (t - static_cast<int>(chosen.size())); ++i) {
        const std::uint64_t next = common & nb[i];
        if (popcount(next) < t) continue;
        chosen.push_back(i);
        if (rec(i + 1, next)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (rec(0, full)) {
      Biclique out;
      out.black = black;
      out.left = chosen;
      std::uint64_t common = full;
      for (int i : chosen) common &= nb[i];
      while (static_cast<int>(out.right.size()) < t) {
        out.right.push_back(__builtin_ctzll(common));
        common &= common - 1;
      }
      return out;
    }
  }
  return std::nullopt;
}

ButterflyResult butterfly_dichotomy(const TwoColoring& c, const std::vector<std::vector<Vertex>>& blocks,
                                    const std::vector<std::vector<Vertex>>& w_sets, int chi, int m,
                                    int min_w_size) {
  require(c.uniformity() == 3, "butterfly_dichotomy: 3-uniform colourings only");
  require(chi >= 1 && m >= 1, "butterfly_dichotomy: need chi, m >= 1");
  check_disjoint(c, blocks, "butterfly_dichotomy");
  const int r = static_cast<int>(blocks.size());
  require(r <= 32, "butterfly_dichotomy: at most 32 blocks");
  std::vector<std::vector<Vertex>> w = w_sets.empty() ? blocks : w_sets;
  require(static_cast<int>(w.size()) == r, "butterfly_dichotomy: one W-set per block");
  for (int i = 0; i < r; ++i) {
    w[i] = sorted_copy(w[i]);
    const VertexMask block = mask_of(blocks[i]);
    require((mask_of(w[i]) & ~block) == 0, "butterfly_dichotomy: W-set not inside its block");
    require(static_cast<int>(w[i].size()) >= min_w_size, "butterfly_dichotomy: W-set below the size threshold");
    require(red_clique(c, blocks[i]), "butterfly_dichotomy: block is not a red clique");
  }
  ButterflyResult out;

  auto red_through = [&](Vertex a, Vertex b, const std::vector<Vertex>& side, Vertex skip) -> std::optional<Vertex> {
    for (Vertex z : side)
      if (z != skip && triple_color(c, a, b, z) == Color::kRed) return z;
    return std::nullopt;
  };
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (Vertex a : w[i])
        for (Vertex b : w[j]) {
          const auto x = red_through(a, b, w[i], a);
          if (!x) continue;
          const auto y = red_through(a, b, w[j], b);
          if (!y) continue;
          std::vector<Vertex> seq{*x, a, b, *y};
          if (!validate_mono_path(c, 2, seq, Color::kRed).ok)
            throw InternalError("butterfly_dichotomy: red connector failed validation");
          out.red_path = path_cert(3, 2, std::move(seq), Color::kRed);
          return out;
        }

  // No red connector: for a in W_i, b in W_j (i < j), E(a,b,W_j) or E(a,b,W_i) is blue.
  auto blue_through = [&](Vertex a, Vertex b, const std::vector<Vertex>& side, Vertex skip) {
    for (Vertex z : side)
      if (z != skip && triple_color(c, a, b, z) == Color::kRed) return false;
    return true;
  };
  std::vector<std::vector<Vertex>> reduced = w;
  std::vector<std::vector<int>> black(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      BipartiteColoring g;
      g.left = static_cast<int>(reduced[i].size());
      g.right = static_cast<int>(reduced[j].size());
      require(g.right <= 64, "butterfly_dichotomy: W-set too large");
      g.black.assign(g.left, 0);
      for (int x = 0; x < g.left; ++x)
        for (int y = 0; y < g.right; ++y)
          if (blue_through(reduced[i][x], reduced[j][y], w[j], reduced[j][y])) g.black[x] |= std::uint64_t{1} << y;
      std::optional<Biclique> found;
      for (int t = std::min(g.left, g.right); t >= m && !found; --t) found = monochromatic_biclique(g, t);
      if (!found) {
        out.diagnostic = "scale too small: no monochromatic K_{" + std::to_string(m) + "," + std::to_string(m) +
                         "} between reduced W-sets " + std::to_string(i) + " and " + std::to_string(j);
        return out;
      }
      std::vector<Vertex> left, right;
      for (int x : found->left) left.push_back(reduced[i][x]);
      for (int y : found->right) right.push_back(reduced[j][y]);
      reduced[i] = std::move(left);
      reduced[j] = std::move(right);
      black[i][j] = found->black ? 1 : 0;
    }
  for (auto& s : reduced) {
    if (static_cast<int>(s.size()) < m) {
      out.diagnostic = "scale too small: a W-set has fewer than m vertices";
      return out;
    }
    s.resize(m);
  }
  Tournament t(r);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      if (black[i][j]) t.orient(j, i);
    }
  out.reduced = reduced;
  out.reduced_tournament = t;
  const auto order = find_transitive_subtournament(t, chi);
  if (!order) {
    out.diagnostic = "scale too small: reduced tournament on " + std::to_string(r) + " blocks has no TT_" +
                     std::to_string(chi);
    return out;
  }
  const auto target = tournament_hypergraph(Tournament::transitive(chi), m);
  std::vector<std::vector<Vertex>> hosts;
  for (int s : *order) hosts.push_back(reduced[s]);
  auto cert = partite_embedding(c, target.graph, target.classes, hosts, Color::kBlue);
  if (!cert) throw InternalError("butterfly_dichotomy: reduced blocks do not carry a blue H(TT_chi, m)");
  out.blue = std::move(cert);
  return out;
}

double triple_density(const TwoColoring& c, const std::vector<Vertex>& x, const std::vector<Vertex>& y,
                      Color color) {
  require(c.uniformity() == 3, "triple_density: 3-uniform colourings only");
  long long total = 0;
  long long hits = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      for (Vertex z : y) {
        if (z == x[i] || z == x[j]) continue;
        ++total;
        if (triple_color(c, x[i], x[j], z) == color) ++hits;
      }
  return total == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(total);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  require(bound > 0, "uniform_below: empty range");
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

RandomEmbedReport random_embed(const TwoColoring& c, const std::vector<Vertex>& a,
                               const std::vector<std::vector<Vertex>>& ys, int m, double gamma, int trials,
                               std::uint64_t seed) {
  require(c.uniformity() == 3, "random_embed: 3-uniform colourings only");
  require(m >= 1 && trials >= 0, "random_embed: need m >= 1 and trials >= 0");
  require(gamma > 0.0 && gamma <= 1.0, "random_embed: gamma must lie in (0,1]");
  std::vector<std::vector<Vertex>> classes{a};
  classes.insert(classes.end(), ys.begin(), ys.end());
  check_disjoint(c, classes, "random_embed");
  const int chi = static_cast<int>(classes.size());
  constexpr double kTol = 1e-12;
  for (const auto& cls : classes)
    require(static_cast<double>(cls.size()) * gamma >= 1.0 - kTol, "random_embed: a class is smaller than 1/gamma");
  RandomEmbedReport out;
  for (int i = 0; i < chi; ++i)
    for (int j = i + 1; j < chi; ++j) {
      const double d = triple_density(c, classes[i], classes[j], Color::kBlue);
      out.densities.push_back(d);
      require(d >= 1.0 - gamma - kTol, "random_embed: arc density below 1 - gamma");
    }
  const double m3 = static_cast<double>(m) * m * m;
  out.union_bound = static_cast<double>(chi) * (chi - 1) / 2.0 * m3 * 2.0 * gamma;
  out.coarse_bound = static_cast<double>(chi) * chi * m3 * gamma;
  const auto target = tournament_hypergraph(Tournament::transitive(chi), m);
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    ++out.trials_used;
    std::vector<Vertex> mapping(target.graph.order(), -1);
    bool repeated = false;
    for (int s = 0; s < chi; ++s) {
      VertexMask picked = 0;
      for (int i = 0; i < m; ++i) {
        const Vertex v = classes[s][uniform_below(rng, classes[s].size())];
        if ((picked >> v) & 1U) repeated = true;
        picked |= bit(v);
        mapping[target.classes[s][i]] = v;
      }
    }
    if (repeated) {
      ++out.collisions;
      continue;
    }
    if (!validate_embedding(c, target.graph, mapping, Color::kBlue).ok) {
      ++out.red_hits;
      continue;
    }
    out.witness = embedding_cert(c, target.graph, std::move(mapping), Color::kBlue);
    break;
  }
  return out;
}

void SimpleGraph::add_edge(int a, int b) {
  require(a >= 0 && b >= 0 && a < n && b < n && a != b, "SimpleGraph: bad edge");
  if (adj.size() != static_cast<std::size_t>(n)) adj.resize(n, 0);
  adj[a] |= bit(b);
  adj[b] |= bit(a);
}

long long SimpleGraph::edge_count() const {
  long long twice = 0;
  for (VertexMask m : adj) twice += popcount(m);
  return twice / 2;
}

std::optional<std::vector<int>> erdos_gallai_path(const SimpleGraph& g, int length, std::uint64_t node_budget) {
  require(g.n >= 0 && g.n <= 64, "erdos_gallai_path: at most 64 vertices");
  require(length >= 0, "erdos_gallai_path: negative length");
  if (length + 1 > g.n) return std::nullopt;
  std::vector<VertexMask> adj = g.adj;
  adj.resize(g.n, 0);
  if (node_budget == 0) node_budget = 20'000'000;
  std::uint64_t nodes = 0;
  std::vector<int> path;
  auto reachable = [&](int from, VertexMask used) {
    VertexMask seen = bit(from);
    VertexMask frontier = seen;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= adj[__builtin_ctzll(f)];
      next &= ~(seen | used);
      seen |= next;
      frontier = next;
    }
    return popcount(seen) - 1;
  };
  std::function<bool(VertexMask)> rec = [&](VertexMask used) -> bool {
    if (++nodes > node_budget) throw GuardExceeded("erdos_gallai_path: node budget exhausted");
    if (static_cast<int>(path.size()) == length + 1) return true;
    const int last = path.back();
    if (static_cast<int>(path.size()) + reachable(last, used) < length + 1) return false;
    for (VertexMask cand = adj[last] & ~used; cand; cand &= cand - 1) {
      const int v = __builtin_ctzll(cand);
      path.push_back(v);
      if (rec(used | bit(v))) return true;
      path.pop_back();
    }
    return false;
  };
  for (int s = 0; s < g.n; ++s) {
    path.assign(1, s);
    if (rec(bit(s))) return path;
  }
  return std::nullopt;
}

AbsorbingResult absorbing_block(const TwoColoring& c, const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                                int d, double eta, double threshold_scale) {
  require(c.uniformity() == 3, "absorbing_block: 3-uniform colourings only");
  require(d >= 1, "absorbing_block: d must be positive");
  require(eta > 0.0 && eta <= 1.0, "absorbing_block: eta must lie in (0,1]");
  check_disjoint(c, {a, b}, "absorbing_block");
  require(static_cast<int>(b.size()) >= d, "absorbing_block: |B| < d");
  require(b.size() <= 64, "absorbing_block: |B| > 64");
  require(red_clique(c, a), "absorbing_block: A is not a red clique");
  if (threshold_scale > 0.0) {
    const double a_min = threshold_scale * 4.0 * d * std::pow(std::exp(1.0) / eta, d);
    const double b_min = threshold_scale * d / eta;
    require(static_cast<double>(a.size()) >= a_min, "absorbing_block: |A| below the scaled threshold");
    require(static_cast<double>(b.size()) >= b_min, "absorbing_block: |B| below the scaled threshold");
  }
  AbsorbingResult out;
  out.red_density = triple_density(c, a, b, Color::kRed);
  require(out.red_density >= eta - 1e-12, "absorbing_block: red density d_r(A,A,B) below eta");
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  std::vector<std::vector<std::uint64_t>> support(na, std::vector<std::uint64_t>(na, 0));
  for (int i = 0; i < na; ++i)
    for (int j = i + 1; j < na; ++j)
      for (int z = 0; z < nb; ++z)
        if (triple_color(c, a[i], a[j], b[z]) == Color::kRed) support[i][j] |= std::uint64_t{1} << z;

  require(binomial(nb, d) <= 5'000'000, "absorbing_block: too many d-subsets of B");
  std::vector<int> b_index(nb);
  std::iota(b_index.begin(), b_index.end(), 0);
  long long best = -1;
  std::uint64_t best_set = 0;
  for_each_subset_of(std::span<const int>(b_index), d, [&](const KSet& s) {
    std::uint64_t set = 0;
    for (int z : s) set |= std::uint64_t{1} << z;
    long long count = 0;
    for (int i = 0; i < na; ++i)
      for (int j = i + 1; j < na; ++j)
        if ((support[i][j] & set) == set) ++count;
    if (count > best) {
      best = count;
      best_set = set;
    }
  });
  for (std::uint64_t s = best_set; s; s &= s - 1) out.b_choice.push_back(b[__builtin_ctzll(s)]);

  SimpleGraph g;
  g.n = na;
  g.adj.assign(na, 0);
  for (int i = 0; i < na; ++i)
    for (int j = i + 1; j < na; ++j)
      if ((support[i][j] & best_set) == best_set) g.add_edge(i, j);
  out.aux_edges = g.edge_count();
  out.bound_holds = out.aux_edges > static_cast<long long>(d) * na;
  const auto walk = erdos_gallai_path(g, 2 * d + 1);
  if (!walk) {
    if (out.bound_holds) throw InternalError("absorbing_block: e(G) > d|A| but no path of length 2d+1");
    out.diagnostic = "auxiliary graph too sparse: e(G) = " + std::to_string(out.aux_edges) + " <= d|A| = " +
                     std::to_string(static_cast<long long>(d) * na) + " and no path of length 2d+1";
    return out;
  }
  std::vector<Vertex> seq;
  for (int i = 0; i < d; ++i) {
    seq.push_back(a[(*walk)[2 * i]]);
    seq.push_back(a[(*walk)[2 * i + 1]]);
    seq.push_back(out.b_choice[i]);
  }
  seq.push_back(a[(*walk)[2 * d]]);
  seq.push_back(a[(*walk)[2 * d + 1]]);
  const auto check = validate_mono_path(c, 2, seq, Color::kRed);
  if (!check.ok) throw InternalError("absorbing_block: interleaved path invalid: " + check.reason);
  out.path = std::move(seq);
  return out;
}

EngineParams engine_params_from_json(const Json& j) {
  require(j.is_object(), "engine params: expected a JSON object");
  EngineParams p;
  for (const auto& [key, value] : j.items()) {
    if (key == "target") p.target = value.get<int>();
    else if (key == "cycle") p.cycle = value.get<bool>();
    else if (key == "block_size") p.block_size = value.get<int>();
    else if (key == "epsilon") p.epsilon = value.get<double>();
    else if (key == "d") p.d = value.get<int>();
    else if (key == "gamma") p.gamma = value.get<double>();
    else if (key == "q") p.q = value.get<int>();
    else if (key == "trials") p.trials = value.get<int>();
    else if (key == "seed") p.seed = value.get<std::uint64_t>();
    else if (key == "max_rounds") p.max_rounds = value.get<int>();
    else if (key == "max_vertices") p.limits.max_vertices = value.get<int>();
    else if (key == "node_budget") p.limits.node_budget = value.get<std::uint64_t>();
    else if (key == "allow_inexact") p.limits.allow_inexact = value.get<bool>();
    else throw InvalidInput("engine params: unknown key '" + key + "'");
  }
  return p;
}

Json engine_params_to_json(const EngineParams& p) {
  Json j;
  j["target"] = p.target;
  j["cycle"] = p.cycle;
  j["block_size"] = p.block_size;
  j["epsilon"] = p.epsilon;
  j["d"] = p.d;
  j["gamma"] = p.gamma;
  j["q"] = p.q;
  j["trials"] = p.trials;
  j["seed"] = p.seed;
  j["max_rounds"] = p.max_rounds;
  return j;
}

const char* outcome_name(EngineReport::Outcome outcome) {
  switch (outcome) {
    case EngineReport::Outcome::kRed:
      return "red";
    case EngineReport::Outcome::kBlue:
      return "blue";
    case EngineReport::Outcome::kStall:
      return "stall";
  }
  return "stall";
}

Json engine_report_to_json(const EngineReport& report, const TwoColoring& c) {
  Json j;
  j["outcome"] = outcome_name(report.outcome);
  j["stage"] = report.stage;
  if (report.certificate) {
    CertificateContext context;
    context.coloring = c;
    j["certificate"] = certificate_to_json(*report.certificate, context);
  }
  j["log"] = report.log;
  Json checks = Json::array();
  for (const auto& ch : report.checks)
    checks.push_back({{"name", ch.name}, {"lhs", ch.lhs}, {"rhs", ch.rhs}, {"holds", ch.holds}});
  j["checks"] = checks;
  j["flags"] = report.flags;
  Json counters = Json::object();
  for (const auto& [name, value] : report.counters) counters[name] = value;
  j["counters"] = counters;
  return j;
}

namespace {

// Records a witness after independent re-validation.
void emit(EngineReport& report, const TwoColoring& c, Certificate cert, EngineReport::Outcome outcome,
          const std::string& stage) {
  CertificateContext context;
  context.coloring = c;
  const auto check = check_certificate(cert, context);
  if (!check.ok) throw InternalError("engine witness at stage '" + stage + "' failed validation: " + check.reason);
  report.outcome = outcome;
  report.certificate = std::move(cert);
  report.stage = stage;
}

void add_check(EngineReport& report, std::string name, long long lhs, long long rhs) {
  report.checks.push_back({std::move(name), lhs, rhs, lhs >= rhs});
}

using Elements = std::vector<std::vector<Vertex>>;

int element_vertex_count(const Elements& elements, int ell, bool closed) {
  int total = 0;
  for (const auto& e : elements) total += static_cast<int>(e.size()) - ell;
  return closed ? total : total + ell;
}

std::optional<CliqueChain> checked_chain(const TwoColoring& c, const Elements& elements, int ell, bool closed) {
  try {
    CliqueChain chain = chain_from_elements(elements, c.uniformity(), ell, closed);
    if (!validate_chain(chain, &c).ok) return std::nullopt;
    return chain;
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
}

// Red path on exactly `target` vertices taken as a prefix of a spanning order.
std::optional<Certificate> path_prefix(const TwoColoring& c, int ell, const std::vector<Vertex>& order, int target) {
  if (static_cast<int>(order.size()) < target) return std::nullopt;
  std::vector<Vertex> seq(order.begin(), order.begin() + target);
  if (!validate_mono_path(c, ell, seq, Color::kRed).ok) return std::nullopt;
  return path_cert(c.uniformity(), ell, std::move(seq), Color::kRed);
}

// Shrinks a closed chain to `target` vertices by dropping non-junction vertices
// of its elements, then returns the spanning cycle.
std::optional<Certificate> trimmed_cycle(const TwoColoring& c, const CliqueChain& chain, int target) {
  const int k = chain.k;
  const int ell = chain.ell;
  const int step = k - ell;
  int p = static_cast<int>(chain.vertices.size());
  if (p < target || (p - target) % step != 0) return std::nullopt;
  Elements elements = chain_elements(chain);
  if (elements.size() == 1) {
    elements[0].resize(target);
  } else {
    bool progress = true;
    while (p > target && progress) {
      progress = false;
      for (auto& e : elements) {
        const int len = static_cast<int>(e.size());
        if (p > target && len - step >= k && len - 2 * ell >= step) {
          e.erase(e.begin() + ell, e.begin() + ell + step);
          p -= step;
          progress = true;
        }
      }
    }
    if (p != target) return std::nullopt;
  }
  const auto trimmed = checked_chain(c, elements, ell, true);
  if (!trimmed) return std::nullopt;
  auto seq = spanning_path(*trimmed);
  if (!validate_mono_cycle(c, ell, seq, Color::kRed).ok) return std::nullopt;
  return cycle_cert(k, ell, std::move(seq));
}

// Loose (k-1)-graph quantity tau(k-1, sigma): exact when the bounds meet or the
// search is small, otherwise the upper bound 2 sigma - 2 (flagged).
long long loose_tau(int k, int sigma, EngineReport& report) {
  const int kk = k - 1;
  if (sigma < kk) return std::max(0, sigma - 1);
  const long long lower = (sigma - 1) + static_cast<long long>(kk - 1) * ((sigma - 1) / (kk - 1));
  const long long upper = 2LL * sigma - 2;
  if (lower == upper) return upper;
  if (sigma <= 4) {
    const auto t = tau_exact(kk, sigma);
    if (t.exact) return t.value;
  }
  report.flags.push_back("tau_upper_bound_used");
  return upper;
}

// An excursion is a red loose path leaving element S at its first vertex and
// returning at its last, with all interior vertices outside the chain.
using Excursion = std::vector<std::vector<Vertex>>;

// Replaces element j of an open loose chain by f_1, X_1, f_2, X_2, ..., S',
// where f_i are red edges inside S joining the excursions X_i.
std::optional<Elements> insert_excursions(const TwoColoring& c, const Elements& elements, std::size_t j,
                                          const std::vector<Excursion>& excursions) {
  const int k = c.uniformity();
  const auto& s = elements[j];
  const Vertex x0 = s.front();
  const Vertex x1 = s.back();
  VertexMask used_in_s = 0;
  const VertexMask s_mask = mask_of(s);
  for (const auto& ex : excursions)
    for (const auto& e : ex)
      for (Vertex v : e)
        if ((s_mask >> v) & 1U) used_in_s |= bit(v);
  if ((used_in_s >> x0) & 1U || (used_in_s >> x1) & 1U) return std::nullopt;
  std::vector<Vertex> filler;
  for (Vertex v : s)
    if (v != x0 && v != x1 && !((used_in_s >> v) & 1U)) filler.push_back(v);
  std::size_t next = 0;
  Elements replacement;
  Vertex current = x0;
  for (const auto& ex : excursions) {
    if (filler.size() - next < static_cast<std::size_t>(k - 2)) return std::nullopt;
    std::vector<Vertex> f{current};
    for (int i = 0; i < k - 2; ++i) f.push_back(filler[next++]);
    f.push_back(ex.front().front());
    replacement.push_back(std::move(f));
    for (const auto& e : ex) replacement.push_back(e);
    current = ex.back().back();
  }
  std::vector<Vertex> rest(filler.begin() + static_cast<std::ptrdiff_t>(next), filler.end());
  while (!rest.empty() && (static_cast<int>(rest.size()) + 1) % (k - 1) != 0) rest.pop_back();
  if ((static_cast<int>(rest.size()) + 1) % (k - 1) != 0) return std::nullopt;
  std::vector<Vertex> last{current};
  last.insert(last.end(), rest.begin(), rest.end());
  last.push_back(x1);
  if (static_cast<int>(last.size()) < k) return std::nullopt;
  replacement.push_back(std::move(last));
  Elements out(elements.begin(), elements.begin() + static_cast<std::ptrdiff_t>(j));
  out.insert(out.end(), replacement.begin(), replacement.end());
  out.insert(out.end(), elements.begin() + static_cast<std::ptrdiff_t>(j) + 1, elements.end());
  if (!checked_chain(c, out, 1, false)) return std::nullopt;
  return out;
}

struct LooseState {
  std::vector<Elements> chains;
  VertexMask in_chains = 0;

  void refresh() {
    in_chains = 0;
    for (const auto& ch : chains)
      for (const auto& e : ch) in_chains |= mask_of(e);
  }
};

// Non-junction vertices of element j of an open chain.
std::vector<Vertex> free_part(const Elements& ch, std::size_t j) {
  const auto& e = ch[j];
  std::vector<Vertex> out;
  for (std::size_t i = 1; i + 1 < e.size(); ++i) out.push_back(e[i]);
  return out;
}

bool is_flexible(const std::vector<Vertex>& e, int k) { return static_cast<int>(e.size()) > std::max(k, 2); }

int open_chain_order(const Elements& ch) { return element_vertex_count(ch, 1, false); }

// The same open chain traversed from its other end.
Elements reversed_chain(const Elements& ch) {
  Elements out(ch.rbegin(), ch.rend());
  for (auto& e : out) std::reverse(e.begin(), e.end());
  return out;
}

}  // namespace

EngineReport loose_witness_engine(const TwoColoring& c, const Hypergraph& h, const EngineParams& params) {
  const int k = c.uniformity();
  require(k >= 3, "loose_witness_engine: k must be at least 3");
  require(h.uniformity() == k, "loose_witness_engine: H uniformity differs from the colouring");
  require(c.order() <= 64, "loose_witness_engine: at most 64 vertices");
  const int n = params.target;
  const int step = k - 1;
  if (params.cycle)
    require(n >= k && n % step == 0, "loose_witness_engine: cycle order must be a multiple of k-1 and >= k");
  else
    require(n >= k && (n - 1) % step == 0, "loose_witness_engine: path order must be 1 mod k-1 and >= k");
  require(params.block_size >= k, "loose_witness_engine: block_size must be at least k");
  EngineReport report;
  const int big_n = c.order();

  const auto profile = ramsey_profile(h);
  const int chi = profile.chi;
  const int sigma = profile.sigma;
  const long long tau = loose_tau(k, sigma, report);
  const long long budget = std::max<long long>(tau - 2 * k + 3, sigma);
  report.counters = {{"N", big_n}, {"n", n}, {"chi", chi}, {"sigma", sigma}, {"tau", tau}, {"c", budget}};
  if (params.cycle) {
    const long long required = (chi - 1LL) * (n - 1) + 4LL * k * (chi - 1) * (chi - 2) / 2 + tau + 1;
    add_check(report, "N >= (chi-1)(n-1) + 4k C(chi-1,2) + tau + 1", big_n, required);
  } else {
    add_check(report, "N >= (chi-1)(n-1) + max(tau-2k+3, sigma)", big_n, (chi - 1LL) * (n - 1) + budget);
  }

  // Blue side of the partition: a blue clique on v(H) vertices hosts H.
  if (h.size() == 0 && h.order() <= big_n) {
    std::vector<Vertex> mapping(h.order());
    std::iota(mapping.begin(), mapping.end(), 0);
    emit(report, c, embedding_cert(c, h, std::move(mapping), Color::kBlue), EngineReport::Outcome::kBlue,
         "edgeless target");
    return report;
  }
  const int blue_size = std::max(k, h.order());
  CliquePartition partition = clique_partition(c, params.block_size, blue_size, params.limits);
  std::vector<std::vector<Vertex>> red_blocks;
  for (const auto& b : partition.blocks) {
    if (b.color == Color::kBlue) {
      std::vector<Vertex> mapping(b.vertices.begin(), b.vertices.begin() + h.order());
      emit(report, c, embedding_cert(c, h, std::move(mapping), Color::kBlue), EngineReport::Outcome::kBlue,
           "clique partition");
      return report;
    }
    red_blocks.push_back(b.vertices);
  }
  report.log.push_back("partition: " + std::to_string(red_blocks.size()) + " red blocks, " +
                       std::to_string(partition.leftover.size()) + " leftover");

  LooseState state;
  if (!red_blocks.empty()) {
    PathSystem system = build_path_system(c, red_blocks, 1, 2, params.epsilon < 0 ? 0.5 : params.epsilon);
    report.log.push_back("path system: " + std::to_string(system.forest.size()) + " forest edges, " +
                         std::to_string(system.components) + " components");
    if (system.stalled) report.log.push_back(system.diagnostic);
    ChainAssembly assembly;
    try {
      assembly = assemble_chains(c, system);
    } catch (const InvalidInput& e) {
      report.log.push_back(std::string("chain assembly: ") + e.what());
    }
    for (const auto& chain : assembly.chains) {
      if (params.cycle) {
        if (auto cert = trimmed_cycle(c, chain, n)) {
          emit(report, c, std::move(*cert), EngineReport::Outcome::kRed, "chain assembly");
          return report;
        }
      }
      if (auto opened = cut_open(chain)) {
        state.chains.push_back(chain_elements(*opened));
      } else {
        const auto order = spanning_path(chain);
        int len = static_cast<int>(order.size());
        while (len >= k && (len - 1) % step != 0) --len;
        if (len < k) continue;
        Elements windows;
        for (int w = 0; w + k <= len; w += step) windows.emplace_back(order.begin() + w, order.begin() + w + k);
        state.chains.push_back(std::move(windows));
      }
    }
  }
  if (state.chains.empty()) {
    for (const auto& b : red_blocks) {
      std::vector<Vertex> e = b;
      while (static_cast<int>(e.size()) > k && (e.size() - 1) % step != 0) e.pop_back();
      state.chains.push_back({e});
    }
    if (!red_blocks.empty()) report.log.push_back("using the red blocks as one-element chains");
  }
  if (state.chains.empty()) {
    std::optional<KSet> red;
    for_each_kset(big_n, k, [&](const KSet& s) {
      if (!red && c.color(s) == Color::kRed) red = s;
    });
    if (red) {
      state.chains.push_back({*red});
      report.log.push_back("seeded a chain from the first red edge");
    }
  }
  state.refresh();

  const auto h_classes = profile.classes();
  std::size_t class_max = 0;
  for (const auto& cls : h_classes) class_max = std::max(class_max, cls.size());

  auto all_vertices_mask = big_n >= 64 ? ~VertexMask{0} : ((VertexMask{1} << big_n) - 1);
  auto outside = [&]() { return from_mask(all_vertices_mask & ~state.in_chains); };

  for (int round = 0; round < params.max_rounds; ++round) {
    std::sort(state.chains.begin(), state.chains.end(),
              [](const Elements& x, const Elements& y) { return open_chain_order(x) > open_chain_order(y); });
    // Witness from the longest chain.
    if (!state.chains.empty()) {
      const auto chain = checked_chain(c, state.chains.front(), 1, false);
      if (!chain) throw InternalError("loose_witness_engine: working chain became invalid");
      const auto order = spanning_path(*chain);
      if (!params.cycle) {
        if (auto cert = path_prefix(c, 1, order, n)) {
          emit(report, c, std::move(*cert), EngineReport::Outcome::kRed, "chain to path");
          return report;
        }
      } else if (static_cast<int>(order.size()) >= n - k + 2) {
        const int len = n - k + 2;
        std::vector<Vertex> prefix(order.begin(), order.begin() + len);
        const VertexMask taken = mask_of(prefix);
        const auto pool = from_mask(all_vertices_mask & ~taken);
        std::optional<Certificate> found;
        for_each_subset_of(std::span<const Vertex>(pool), k - 2, [&](const KSet& x) {
          if (found) return;
          std::vector<Vertex> seq = prefix;
          seq.insert(seq.end(), x.begin(), x.end());
          if (validate_mono_cycle(c, 1, seq, Color::kRed).ok) found = cycle_cert(k, 1, std::move(seq));
        });
        if (found) {
          emit(report, c, std::move(*found), EngineReport::Outcome::kRed, "chain closing");
          return report;
        }
      }
    }
    const auto w = outside();

    // Blue side: every crossing edge among chain flexible parts and W is blue.
    if (class_max > 0) {
      std::vector<std::vector<Vertex>> hosts;
      for (const auto& ch : state.chains) {
        std::vector<Vertex> flex;
        for (std::size_t j = 0; j < ch.size(); ++j)
          if (is_flexible(ch[j], k))
            for (Vertex v : free_part(ch, j)) flex.push_back(v);
        if (flex.size() >= class_max) hosts.emplace_back(flex.begin(), flex.begin() + class_max);
      }
      for (std::size_t i = 0; i + class_max <= w.size(); i += class_max)
        hosts.emplace_back(w.begin() + i, w.begin() + i + class_max);
      if (hosts.size() >= h_classes.size()) {
        hosts.resize(h_classes.size());
        const auto dich = independence_dichotomy(c, hosts);
        if (dich.all_blue) {
          if (auto cert = partite_embedding(c, h, h_classes, hosts, Color::kBlue)) {
            emit(report, c, std::move(*cert), EngineReport::Outcome::kBlue, "independence dichotomy");
            return report;
          }
          throw InternalError("loose_witness_engine: all-blue crossing structure did not host H");
        }
      }
    }

    bool moved = false;
    const VertexMask w_mask = mask_of(w);

    // (i) Red matching with 1 <= |e cap W| <= k-2 into a flexible element.
    for (std::size_t ci = 0; ci < state.chains.size() && !moved; ++ci) {
      auto& ch = state.chains[ci];
      for (std::size_t j = 0; j < ch.size() && !moved; ++j) {
        if (!is_flexible(ch[j], k)) continue;
        const auto inner = free_part(ch, j);
        std::vector<Vertex> pool = w;
        pool.insert(pool.end(), inner.begin(), inner.end());
        std::sort(pool.begin(), pool.end());
        std::vector<Excursion> matching;
        VertexMask taken = 0;
        int w_count = 0;
        for_each_subset_of(std::span<const Vertex>(pool), k, [&](const KSet& e) {
          if (w_count > k - 2) return;
          const VertexMask em = mask_of(e);
          const int in_w = popcount(em & w_mask);
          if (in_w < 1 || in_w > k - 2 || (em & taken) || c.color(e) != Color::kRed) return;
          std::vector<Vertex> s_part, w_part;
          for (Vertex v : e) ((w_mask >> v) & 1U ? w_part : s_part).push_back(v);
          std::vector<Vertex> ordered{s_part.front()};
          ordered.insert(ordered.end(), w_part.begin(), w_part.end());
          ordered.insert(ordered.end(), s_part.begin() + 1, s_part.end() - 1);
          ordered.push_back(s_part.back());
          matching.push_back({ordered});
          taken |= em;
          w_count += in_w;
        });
        for (std::size_t size = matching.size(); size >= 1 && !moved; --size) {
          std::vector<Excursion> use(matching.begin(), matching.begin() + static_cast<std::ptrdiff_t>(size));
          auto next = insert_excursions(c, ch, j, use);
          if (next && open_chain_order(*next) > open_chain_order(ch)) {
            report.log.push_back("matching extension: " + std::to_string(size) + " edges into chain " +
                                 std::to_string(ci) + ", order " + std::to_string(open_chain_order(ch)) + " -> " +
                                 std::to_string(open_chain_order(*next)));
            ch = std::move(*next);
            moved = true;
          }
        }
      }
    }

    // (ii) (k-1)-graph J on W: two edges meeting in one vertex give a detour.
    if (!moved && static_cast<int>(w.size()) >= 2 * k - 3) {
      struct JEdge {
        KSet f;
        Vertex anchor;
        std::size_t chain;
        std::size_t element;
      };
      std::vector<JEdge> j_edges;
      VertexMask anchors_used = 0;
      std::vector<std::tuple<Vertex, std::size_t, std::size_t>> anchors;
      for (std::size_t ci = 0; ci < state.chains.size(); ++ci)
        for (std::size_t j = 0; j < state.chains[ci].size(); ++j)
          if (is_flexible(state.chains[ci][j], k))
            for (Vertex v : free_part(state.chains[ci], j)) anchors.emplace_back(v, ci, j);
      for_each_subset_of(std::span<const Vertex>(w), k - 1, [&](const KSet& f) {
        for (const auto& [v, ci, j] : anchors) {
          if ((anchors_used >> v) & 1U) continue;
          KSet e = f;
          e.push_back(v);
          std::sort(e.begin(), e.end());
          if (c.color(e) != Color::kRed) continue;
          anchors_used |= bit(v);
          j_edges.push_back({f, v, ci, j});
          break;
        }
      });
      report.counters.emplace_back("J_edges_round_" + std::to_string(round), static_cast<long long>(j_edges.size()));
      for (std::size_t x = 0; x < j_edges.size() && !moved; ++x)
        for (std::size_t y = x + 1; y < j_edges.size() && !moved; ++y) {
          const auto& f1 = j_edges[x];
          const auto& f2 = j_edges[y];
          if (f1.chain != f2.chain || f1.element != f2.element) continue;
          const VertexMask shared = mask_of(f1.f) & mask_of(f2.f);
          if (popcount(shared) != 1) continue;
          const Vertex z = __builtin_ctzll(shared);
          std::vector<Vertex> first{f1.anchor};
          for (Vertex v : f1.f)
            if (v != z) first.push_back(v);
          first.push_back(z);
          std::vector<Vertex> second{z};
          for (Vertex v : f2.f)
            if (v != z) second.push_back(v);
          second.push_back(f2.anchor);
          auto& ch = state.chains[f1.chain];
          auto next = insert_excursions(c, ch, f1.element, {Excursion{first, second}});
          if (next && open_chain_order(*next) > open_chain_order(ch)) {
            report.log.push_back("J detour into chain " + std::to_string(f1.chain) + ", order " +
                                 std::to_string(open_chain_order(ch)) + " -> " +
                                 std::to_string(open_chain_order(*next)));
            ch = std::move(*next);
            moved = true;
          }
        }
    }

    // (iii) Two chains joined end to start by a red edge with k-2 vertices in W.
    for (std::size_t ai = 0; ai < state.chains.size() && !moved; ++ai) {
      for (std::size_t bi = 0; bi < state.chains.size() && !moved; ++bi) {
        if (ai == bi) continue;
        for (int flip = 0; flip < 4 && !moved; ++flip) {
          Elements a_ch = (flip & 1) ? reversed_chain(state.chains[ai]) : state.chains[ai];
          Elements b_ch = (flip & 2) ? reversed_chain(state.chains[bi]) : state.chains[bi];
          const Vertex a_end = a_ch.back().back();
          const Vertex b_start = b_ch.front().front();
          for_each_subset_of(std::span<const Vertex>(w), k - 2, [&](const KSet& x) {
            if (moved) return;
            KSet e = x;
            e.push_back(a_end);
            e.push_back(b_start);
            std::sort(e.begin(), e.end());
            if (c.color(e) != Color::kRed) return;
            Elements joined = a_ch;
            std::vector<Vertex> bridge{a_end};
            bridge.insert(bridge.end(), x.begin(), x.end());
            bridge.push_back(b_start);
            joined.push_back(std::move(bridge));
            joined.insert(joined.end(), b_ch.begin(), b_ch.end());
            if (!checked_chain(c, joined, 1, false)) return;
            report.log.push_back("joined chains " + std::to_string(ai) + " and " + std::to_string(bi) + ", order " +
                                 std::to_string(open_chain_order(joined)));
            state.chains[ai] = std::move(joined);
            state.chains.erase(state.chains.begin() + static_cast<std::ptrdiff_t>(bi));
            moved = true;
          });
        }
      }
    }

    // (iv) Red edge with k-1 vertices in W attached at a chain end.
    for (std::size_t ci = 0; ci < state.chains.size() && !moved; ++ci) {
      auto& ch = state.chains[ci];
      for (bool front : {true, false}) {
        if (moved) break;
        auto& s = front ? ch.front() : ch.back();
        std::vector<std::size_t> positions;
        for (std::size_t i = 0; i < s.size(); ++i) {
          if ((front && i + 1 == s.size()) || (!front && i == 0)) continue;
          positions.push_back(i);
        }
        for (std::size_t pos : positions) {
          if (moved) break;
          const Vertex v = s[pos];
          for_each_subset_of(std::span<const Vertex>(w), k - 1, [&](const KSet& f) {
            if (moved) return;
            KSet e = f;
            e.push_back(v);
            std::sort(e.begin(), e.end());
            if (c.color(e) != Color::kRed) return;
            Elements next = ch;
            auto& t = front ? next.front() : next.back();
            t.erase(t.begin() + static_cast<std::ptrdiff_t>(pos));
            std::vector<Vertex> added;
            if (front) {
              t.insert(t.begin(), v);
              added = f;
              added.push_back(v);
              next.insert(next.begin(), added);
            } else {
              t.push_back(v);
              added.push_back(v);
              added.insert(added.end(), f.begin(), f.end());
              next.push_back(added);
            }
            if (!checked_chain(c, next, 1, false)) return;
            report.log.push_back(std::string("end extension at the ") + (front ? "front" : "back") + " of chain " +
                                 std::to_string(ci) + ", order " + std::to_string(open_chain_order(ch)) + " -> " +
                                 std::to_string(open_chain_order(next)));
            ch = std::move(next);
            moved = true;
          });
        }
      }
    }
    state.refresh();
    if (!moved) break;
  }

  report.outcome = EngineReport::Outcome::kStall;
  report.stage = "extension";
  const auto w = outside();
  report.counters.emplace_back("W", static_cast<long long>(w.size()));
  report.counters.emplace_back("chains", static_cast<long long>(state.chains.size()));
  for (std::size_t i = 0; i < state.chains.size(); ++i) {
    const long long deficit = n - open_chain_order(state.chains[i]);
    report.counters.emplace_back("ell_" + std::to_string(i), deficit);
    report.checks.push_back({"ell_" + std::to_string(i) + " = 0 mod k-1", deficit % step, 0, deficit % step == 0});
  }
  add_check(report, "|W| >= (chi-1)(k-2) + c", static_cast<long long>(w.size()), (chi - 1LL) * (k - 2) + budget);
  add_check(report, "|W| > tau(k-1, sigma)", static_cast<long long>(w.size()), tau + 1);
  add_check(report, "sigma >= k-1", sigma, k - 1);
  report.log.push_back("no extension move applies; stalled");
  return report;
}

namespace {

// Least N with every tournament on N vertices containing TT_chi, for small chi.
int directed_value(int chi, EngineReport& report) {
  if (chi <= 4) {
    const auto r = directed_ramsey_exact(chi, 9);
    if (r.exact) return r.value;
  }
  report.flags.push_back("directed_ramsey_upper_bound_used");
  return 1 << (chi - 1);
}

}  // namespace

EngineReport tight_witness_engine(const TwoColoring& c, int chi, int m, const EngineParams& params) {
  require(c.uniformity() == 3, "tight_witness_engine: 3-uniform colourings only");
  require(chi >= 2 && m >= 1, "tight_witness_engine: need chi >= 2 and m >= 1");
  require(c.order() <= 64, "tight_witness_engine: at most 64 vertices");
  const int n = params.target;
  require(n >= 3, "tight_witness_engine: target must be at least 3");
  if (params.cycle) require(n >= 4, "tight_witness_engine: cycle target must be at least 4");
  require(params.block_size >= 4, "tight_witness_engine: block_size must be at least 4");
  require(params.d >= 1 && params.q >= 1, "tight_witness_engine: need d, q >= 1");
  EngineReport report;
  const int big_n = c.order();
  const int r = directed_value(chi, report);
  const auto target = tournament_hypergraph(Tournament::transitive(chi), m);
  report.counters = {{"N", big_n}, {"n", n}, {"chi", chi}, {"m", m}, {"R", r}};
  add_check(report, "3N >= 2(R-1)n", 3LL * big_n, 2LL * (r - 1) * n);

  CliquePartition partition = clique_partition(c, params.block_size, chi * m, params.limits);
  std::vector<std::vector<Vertex>> red_blocks;
  for (const auto& b : partition.blocks) {
    if (b.color == Color::kBlue) {
      std::vector<Vertex> mapping(b.vertices.begin(), b.vertices.begin() + target.graph.order());
      emit(report, c, embedding_cert(c, target.graph, std::move(mapping), Color::kBlue),
           EngineReport::Outcome::kBlue, "clique partition");
      return report;
    }
    red_blocks.push_back(b.vertices);
  }
  report.log.push_back("partition: " + std::to_string(red_blocks.size()) + " red blocks, " +
                       std::to_string(partition.leftover.size()) + " leftover");
  if (red_blocks.empty()) {
    report.stage = "clique partition";
    report.log.push_back("no red block of the configured size; stalled");
    return report;
  }

  PathSystem system = build_path_system(c, red_blocks, 2, 2, params.epsilon < 0 ? 1.0 : params.epsilon);
  report.log.push_back("path system: " + std::to_string(system.forest.size()) + " forest edges, " +
                       std::to_string(system.components) + " components");
  if (system.stalled && red_blocks.size() >= 2) {
    std::vector<std::vector<Vertex>> blocks(red_blocks.begin(),
                                            red_blocks.begin() + std::min<std::size_t>(red_blocks.size(), 32));
    const auto fly = butterfly_dichotomy(c, blocks, {}, chi, m);
    if (fly.blue) {
      emit(report, c, *fly.blue, EngineReport::Outcome::kBlue, "butterfly");
      return report;
    }
    report.log.push_back(fly.red_path ? "butterfly: red connector present" : "butterfly: " + fly.diagnostic);
  }
  ChainAssembly assembly;
  try {
    assembly = assemble_chains(c, system);
  } catch (const InvalidInput& e) {
    report.log.push_back(std::string("chain assembly: ") + e.what());
  }
  if (assembly.chains.empty()) {
    report.stage = "chain assembly";
    report.log.push_back("no chain assembled; stalled");
    return report;
  }
  std::stable_sort(assembly.chains.begin(), assembly.chains.end(), [](const CliqueChain& x, const CliqueChain& y) {
    return x.vertices.size() > y.vertices.size();
  });
  CliqueChain q = assembly.chains.front();
  report.counters.emplace_back("v(Q)", static_cast<long long>(q.vertices.size()));

  auto try_emit = [&](const CliqueChain& chain, const std::string& stage) {
    if (params.cycle) {
      if (auto cert = trimmed_cycle(c, chain, n)) {
        emit(report, c, std::move(*cert), EngineReport::Outcome::kRed, stage);
        return true;
      }
      return false;
    }
    if (auto cert = path_prefix(c, 2, spanning_path(chain), n)) {
      emit(report, c, std::move(*cert), EngineReport::Outcome::kRed, stage);
      return true;
    }
    return false;
  };
  if (try_emit(q, "chain assembly")) return report;

  const VertexMask all = big_n >= 64 ? ~VertexMask{0} : ((VertexMask{1} << big_n) - 1);
  const int d = params.d;
  int blocks_absorbed = 0;
  std::uint64_t round = 0;
  // Absorb outside vertices into each flexible element in turn.
  for (std::size_t idx = 0;; ++idx) {
    Elements elements = chain_elements(q);
    const auto check = validate_chain(q, &c);
    if (idx >= elements.size()) break;
    if (!check.flexible[idx] && !check.trivial) continue;
    const auto& s = elements[idx];
    if (s.size() < 4) continue;
    const std::vector<Vertex> inner(s.begin() + 2, s.end() - 2);
    const VertexMask inner_mask = mask_of(inner);
    const VertexMask chain_mask = mask_of(q.vertices);
    std::vector<Vertex> p;
    while (true) {
      ++round;
      const VertexMask p_mask = mask_of(p);
      const auto a = from_mask(inner_mask & ~p_mask);
      if (static_cast<int>(a.size()) < 2 * d + 2) break;
      const auto rest = from_mask(all & ~chain_mask & ~p_mask);
      std::vector<std::vector<Vertex>> ys;
      if (chi == 2) {
        if (static_cast<int>(rest.size()) < params.q) break;
        ys.emplace_back(rest.begin(), rest.begin() + params.q);
      } else {
        const auto aux = tournament_hypergraph(Tournament::transitive(chi - 1), params.q);
        const auto found = find_mono_copy(c.induced(rest), aux.graph, Color::kBlue, params.limits);
        if (!found.witness) {
          report.log.push_back("no blue H(TT_{chi-1}, q) outside the chain");
          break;
        }
        for (const auto& cls : aux.classes) {
          std::vector<Vertex> y;
          for (Vertex u : cls) y.push_back(rest[found.witness->mapping[u]]);
          ys.push_back(std::move(y));
        }
      }
      bool dense_blue = static_cast<double>(a.size()) * params.gamma >= 1.0;
      for (const auto& y : ys) {
        dense_blue = dense_blue && static_cast<double>(y.size()) * params.gamma >= 1.0 &&
                     triple_density(c, a, y, Color::kBlue) >= 1.0 - params.gamma;
      }
      if (dense_blue) {
        const auto emb = random_embed(c, a, ys, m, params.gamma, params.trials, params.seed + round);
        if (emb.witness) {
          emit(report, c, *emb.witness, EngineReport::Outcome::kBlue, "random embedding");
          return report;
        }
        report.log.push_back("random embedding failed in " + std::to_string(emb.trials_used) + " trials");
      }
      std::optional<std::vector<Vertex>> segment;
      for (const auto& y : ys) {
        if (static_cast<int>(y.size()) < d) continue;
        if (triple_density(c, a, y, Color::kRed) < params.gamma) continue;
        const auto block = absorbing_block(c, a, y, d, params.gamma);
        if (block.path) {
          segment = block.path;
          break;
        }
        report.log.push_back("absorbing block: " + block.diagnostic);
      }
      if (!segment) break;
      p.insert(p.end(), segment->begin(), segment->end());
      ++blocks_absorbed;
    }
    if (p.empty()) continue;
    int in_i = 0;
    for (Vertex v : p) in_i += (inner_mask >> v) & 1U ? 1 : 0;
    const int out_i = static_cast<int>(p.size()) - in_i;
    if (static_cast<long long>(d) * in_i != (2LL * d + 2) * out_i)
      throw InternalError("tight_witness_engine: ratio invariant broken");
    std::vector<Vertex> walk{s[0], s[1]};
    walk.insert(walk.end(), p.begin(), p.end());
    const VertexMask p_mask = mask_of(p);
    for (Vertex v : inner)
      if (!((p_mask >> v) & 1U)) walk.push_back(v);
    walk.push_back(s[s.size() - 2]);
    walk.push_back(s.back());
    Elements next;
    if (check.trivial) {
      const int len = static_cast<int>(walk.size());
      for (int i = 0; i < len; ++i) next.push_back({walk[i], walk[(i + 1) % len], walk[(i + 2) % len]});
    } else {
      next.assign(elements.begin(), elements.begin() + static_cast<std::ptrdiff_t>(idx));
      for (std::size_t i = 0; i + 3 <= walk.size(); ++i) next.push_back({walk[i], walk[i + 1], walk[i + 2]});
      next.insert(next.end(), elements.begin() + static_cast<std::ptrdiff_t>(idx) + 1, elements.end());
    }
    const auto grown = checked_chain(c, next, 2, true);
    if (!grown) throw InternalError("tight_witness_engine: absorbed chain failed validation");
    report.log.push_back("absorbed " + std::to_string(out_i) + " outside vertices into element " +
                         std::to_string(idx) + ", order " + std::to_string(q.vertices.size()) + " -> " +
                         std::to_string(grown->vertices.size()));
    q = *grown;
    if (try_emit(q, "absorption")) return report;
    idx += walk.size() - 3;
  }
  report.stage = "absorption";
  report.counters.emplace_back("absorbing_blocks", blocks_absorbed);
  report.counters.emplace_back("v(Q) final", static_cast<long long>(q.vertices.size()));
  add_check(report, "v(Q) >= n", static_cast<long long>(q.vertices.size()), n);
  report.log.push_back("absorption exhausted; stalled");
  return report;
}

}  // namespace rgood
