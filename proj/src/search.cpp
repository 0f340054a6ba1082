#include "rgood/search.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <string>
#include <unordered_map>

#include "embedding.hpp"
#include "rgood/error.hpp"
#include "rgood/generators.hpp"
#include <functional>

namespace rgood {

namespace {

int guard_from_env(const std::string& key, int fallback) {
  const char* env = std::getenv("RGOOD_GUARDS");
  if (env == nullptr) return fallback;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || item.substr(0, eq) != key) continue;
    try {
      return std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw InvalidInput("RGOOD_GUARDS: bad value for " + key);
    }
  }
  return fallback;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

constexpr int kMaxEll = 8;
constexpr std::uint64_t kDenseMemoLimit = std::uint64_t{1} << 26;
constexpr std::uint64_t kDefaultInexactBudget = 20'000'000;

// Exhaustive longest monochromatic ell-path search over (used set, ordered tail)
// states.
class EllPathSearch {
 public:
  using Tail = std::array<int, kMaxEll>;

  EllPathSearch(const TwoColoring& c, int ell, Color color, bool memoize, std::uint64_t budget)
      : c_(c), k_(c.uniformity()), n_(c.order()), ell_(ell), step_(k_ - ell), color_(color), memoize_(memoize),
        budget_(budget) {
    if (memoize_) {
      std::uint64_t tails = 1;
      for (int i = 0; i < ell_; ++i) tails *= static_cast<std::uint64_t>(n_);
      if (n_ <= 40 && tails <= (kDenseMemoLimit >> std::min(n_, 40))) {
        dense_.assign(tails << n_, -1);
      } else {
        use_hash_ = true;
      }
    }
  }

  // Best number of additional edges from a state.
  int solve(VertexMask used, const Tail& tail) {
    ++stats_.nodes;
    if (budget_ != 0 && stats_.nodes > budget_) throw detail::BudgetExhausted{};
    std::uint64_t key = 0;
    if (memoize_) {
      key = memo_key(used, tail);
      const int cached = lookup(key);
      if (cached >= 0) return cached;
    }
    const int bound = (n_ - popcount(used)) / step_;
    int best = 0;
    if (bound > 0) {
      for_each_child(used, tail, [&](VertexMask child_used, const Tail& child_tail, const int* added) {
        if (!memoize_) push(added);
        const int value = 1 + solve(child_used, child_tail);
        if (!memoize_) pop();
        if (value > best) best = value;
        if (best == bound) return true;
        ++stats_.prunes;
        return false;
      });
    }
    if (memoize_) store(key, best);
    return best;
  }

  // Calls f(child_used, child_tail, added_vertices) for every extension by one
  // monochromatic edge, in canonical order; stops when f returns true.
  template <typename F>
  bool for_each_child(VertexMask used, const Tail& tail, F&& f) {
    VertexMask tail_mask = 0;
    for (int i = 0; i < ell_; ++i) tail_mask |= VertexMask{1} << tail[i];
    std::array<int, 16> added{};
    return extend(0, used, tail_mask, tail, added, f);
  }

  template <typename F>
  bool extend(int pos, VertexMask used, VertexMask edge_mask, const Tail& tail, std::array<int, 16>& added, F& f) {
    if (pos == step_) {
      if (c_.color_of_mask(edge_mask) != color_) return false;
      // New tail: last ell entries of (tail ++ added).
      Tail next{};
      for (int i = 0; i < ell_; ++i) {
        const int src = i + step_;
        next[i] = src < ell_ ? tail[src] : added[src - ell_];
      }
      return f(used, next, added.data());
    }
    // Positions that never reach the new tail are interchangeable: keep them increasing.
    const bool interior = pos < step_ - ell_;
    const int low = (interior && pos > 0) ? added[pos - 1] + 1 : 0;
    for (int v = low; v < n_; ++v) {
      const VertexMask bit = VertexMask{1} << v;
      if (used & bit) continue;
      added[pos] = v;
      if (extend(pos + 1, used | bit, edge_mask | bit, tail, added, f)) return true;
    }
    return false;
  }

  void push(const int* added) {
    for (int i = 0; i < step_; ++i) current_.push_back(added[i]);
    if (static_cast<int>(current_.size()) > static_cast<int>(best_sequence_.size())) best_sequence_ = current_;
  }
  void pop() { current_.resize(current_.size() - step_); }

  void set_prefix(const std::vector<int>& prefix) {
    current_ = prefix;
    if (current_.size() > best_sequence_.size()) best_sequence_ = current_;
  }
  const std::vector<int>& best_sequence() const { return best_sequence_; }
  void disable_budget() { budget_ = 0; }
  const SearchStats& stats() const { return stats_; }
  int step() const { return step_; }

 private:
  std::uint64_t memo_key(VertexMask used, const Tail& tail) const {
    std::uint64_t t = 0;
    for (int i = ell_ - 1; i >= 0; --i) t = t * n_ + tail[i];
    return (t << n_) | used;
  }
  int lookup(std::uint64_t key) const {
    if (!use_hash_) return dense_[key];
    auto it = hash_.find(key);
    return it == hash_.end() ? -1 : it->second;
  }
  void store(std::uint64_t key, int value) {
    if (!use_hash_)
      dense_[key] = static_cast<std::int8_t>(value);
    else
      hash_[key] = static_cast<std::int8_t>(value);
  }

  const TwoColoring& c_;
  int k_, n_, ell_, step_;
  Color color_;
  bool memoize_;
  std::uint64_t budget_;
  bool use_hash_ = false;
  std::vector<std::int8_t> dense_;
  std::unordered_map<std::uint64_t, std::int8_t> hash_;
  std::vector<int> current_;
  std::vector<int> best_sequence_;
  SearchStats stats_;
};

Certificate path_certificate(const TwoColoring& c, int ell, Color color, std::vector<Vertex> sequence) {
  Certificate cert;
  cert.kind = CertificateKind::kRedPath;
  cert.color = color;
  cert.k = c.uniformity();
  cert.ell = ell;
  cert.sequence = std::move(sequence);
  return cert;
}

// Calls f(ordered) for every ordering of every r-subset of `items`.
template <typename F>
bool for_each_arrangement(const std::vector<int>& items, int r, F&& f) {
  std::vector<int> chosen;
  std::vector<bool> taken(items.size(), false);
  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(chosen.size()) == r) return f(chosen);
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (taken[i]) continue;
      taken[i] = true;
      chosen.push_back(items[i]);
      const bool stop = rec();
      chosen.pop_back();
      taken[i] = false;
      if (stop) return true;
    }
    return false;
  };
  return rec();
}

}  // namespace

int default_path_guard(int k, int ell) {
  if (ell == 1) return guard_from_env("path_loose", 20);
  if (ell == k - 1) return guard_from_env("path_tight", 16);
  return guard_from_env("path_other", 16);
}

int default_independence_guard() { return guard_from_env("independence", 20); }

int default_embedding_guard() { return guard_from_env("embedding", 64); }

PathSearchResult longest_mono_ell_path(const TwoColoring& c, int ell, Color color, const SearchLimits& limits,
                                       int stop_at_vertices) {
  const auto start = std::chrono::steady_clock::now();
  const int k = c.uniformity();
  const int n = c.order();
  require(ell >= 1 && ell <= k - 1, "longest_mono_ell_path: need 1 <= ell <= k-1");
  require(ell <= kMaxEll && k - ell <= 16, "longest_mono_ell_path: uniformity too large");
  const int guard = limits.max_vertices >= 0 ? limits.max_vertices : default_path_guard(k, ell);
  const bool within_guard = n <= guard;
  if (!within_guard && !limits.allow_inexact)
    throw GuardExceeded("longest_mono_ell_path: n = " + std::to_string(n) + " exceeds guard " +
                        std::to_string(guard));
  const std::uint64_t budget =
      limits.node_budget != 0 ? limits.node_budget : (within_guard ? 0 : kDefaultInexactBudget);
  const int step = k - ell;
  const int max_edges = n >= k ? (n - ell) / step : 0;

  PathSearchResult result;
  result.vertices = ell;
  result.certificate = path_certificate(c, ell, color, {});
  EllPathSearch search(c, ell, color, within_guard, budget);
  int best = 0;
  std::vector<int> best_prefix;
  EllPathSearch::Tail best_tail{};
  VertexMask best_used = 0;
  bool exact = true;
  auto target_reached = [&] {
    return best == max_edges || (stop_at_vertices > 0 && ell + best * step >= stop_at_vertices);
  };
  try {
    for_each_kset(n, k, [&, stop = false](const KSet& e) mutable {
      if (stop || target_reached()) return;
      if (c.color(e) != color) return;
      const VertexMask mask = to_mask(e);
      for_each_arrangement(e, ell, [&](const std::vector<int>& tail_order) {
        EllPathSearch::Tail tail{};
        std::vector<int> prefix;
        for (Vertex v : e)
          if (std::find(tail_order.begin(), tail_order.end(), v) == tail_order.end()) prefix.push_back(v);
        for (int i = 0; i < ell; ++i) {
          tail[i] = tail_order[i];
          prefix.push_back(tail_order[i]);
        }
        search.set_prefix(prefix);
        const int value = 1 + search.solve(mask, tail);
        if (value > best) {
          best = value;
          best_prefix = prefix;
          best_tail = tail;
          best_used = mask;
        }
        return target_reached();
      });
    });
  } catch (const detail::BudgetExhausted&) {
    exact = false;
  }

  std::vector<Vertex> sequence;
  if (best > 0) {
    if (within_guard) {
      // Rebuild the witness from the memo table along optimal children.
      search.disable_budget();
      sequence = best_prefix;
      VertexMask used = best_used;
      EllPathSearch::Tail tail = best_tail;
      int remaining = best - 1;
      while (remaining > 0) {
        bool advanced = false;
        search.for_each_child(used, tail, [&](VertexMask child_used, const EllPathSearch::Tail& child_tail,
                                              const int* added) {
          if (1 + search.solve(child_used, child_tail) != remaining) return false;
          for (int i = 0; i < step; ++i) sequence.push_back(added[i]);
          used = child_used;
          tail = child_tail;
          advanced = true;
          return true;
        });
        if (!advanced) throw InternalError("longest_mono_ell_path: witness reconstruction failed");
        --remaining;
      }
    } else {
      sequence = search.best_sequence();
      best = (static_cast<int>(sequence.size()) - ell) / step;
    }
  }
  result.edges = best;
  result.vertices = ell + best * step;
  result.certificate = path_certificate(c, ell, color, std::move(sequence));
  result.certificate.exact = exact;
  result.certificate.stats = search.stats();
  result.certificate.stats.wall_ms = elapsed_ms(start);
  return result;
}

namespace {

// Monochromatic ell-cycle on p vertices, built as an ell-path whose last ell
// positions repeat its first ell. The smallest cycle vertex is kept in the
// first block of k-ell positions (rotation symmetry).
class EllCycleSearch {
 public:
  EllCycleSearch(const TwoColoring& c, int ell, int p, Color color, std::uint64_t budget)
      : c_(c), k_(c.uniformity()), n_(c.order()), ell_(ell), step_(k_ - ell), p_(p), q_(p / step_),
        color_(color), budget_(budget), seq_(p + ell, -1) {}

  bool run() { return place(0, 0); }
  std::vector<Vertex> cycle() const { return std::vector<Vertex>(seq_.begin(), seq_.begin() + p_); }
  const SearchStats& stats() const { return stats_; }

 private:
  // Fills position pos; after completing each window, checks the edge.
  bool place(int pos, VertexMask used) {
    ++stats_.nodes;
    if (budget_ != 0 && stats_.nodes > budget_) throw detail::BudgetExhausted{};
    if (pos >= k_ && (pos - k_) % step_ == 0) {
      const int edge_index = (pos - k_) / step_;
      if (!edge_ok(edge_index)) {
        ++stats_.prunes;
        return false;
      }
      if (edge_index == q_ - 1) return true;
    }
    if (pos >= p_) {
      seq_[pos] = seq_[pos - p_];
      return place(pos + 1, used);
    }
    if (n_ - popcount(used) < p_ - pos) return false;
    int low = 0;
    if (pos >= step_) low = first_block_min() + 1;
    for (int v = low; v < n_; ++v) {
      const VertexMask bit = VertexMask{1} << v;
      if (used & bit) continue;
      // Vertices of the first block must exceed nothing; later ones exceed its minimum.
      seq_[pos] = v;
      if (place(pos + 1, used | bit)) return true;
    }
    seq_[pos] = -1;
    return false;
  }

  int first_block_min() const {
    int m = seq_[0];
    for (int i = 1; i < step_; ++i) m = std::min(m, seq_[i]);
    return m;
  }

  bool edge_ok(int i) const {
    VertexMask mask = 0;
    for (int j = 0; j < k_; ++j) mask |= VertexMask{1} << seq_[i * step_ + j];
    return c_.color_of_mask(mask) == color_;
  }

  const TwoColoring& c_;
  int k_, n_, ell_, step_, p_, q_;
  Color color_;
  std::uint64_t budget_;
  std::vector<int> seq_;
  SearchStats stats_;
};

}  // namespace

SearchOutcome find_mono_ell_cycle(const TwoColoring& c, int ell, int p, Color color, const SearchLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  const int k = c.uniformity();
  require(ell >= 1 && ell <= k - 1, "find_mono_ell_cycle: need 1 <= ell <= k-1");
  ell_cycle(k, ell, p);  // validates the cycle parameters
  const int guard = limits.max_vertices >= 0 ? limits.max_vertices : default_path_guard(k, ell);
  const bool within_guard = c.order() <= guard;
  if (!within_guard && !limits.allow_inexact)
    throw GuardExceeded("find_mono_ell_cycle: n exceeds guard " + std::to_string(guard));
  SearchOutcome out;
  if (p > c.order()) return out;
  const std::uint64_t budget =
      limits.node_budget != 0 ? limits.node_budget : (within_guard ? 0 : kDefaultInexactBudget);
  EllCycleSearch search(c, ell, p, color, budget);
  bool found = false;
  try {
    found = search.run();
  } catch (const detail::BudgetExhausted&) {
    out.exact = false;
  }
  out.stats = search.stats();
  out.stats.wall_ms = elapsed_ms(start);
  if (found) {
    Certificate cert;
    cert.kind = CertificateKind::kRedCycle;
    cert.color = color;
    cert.k = k;
    cert.ell = ell;
    cert.sequence = search.cycle();
    cert.stats = out.stats;
    out.witness = std::move(cert);
  }
  return out;
}

namespace detail {

EmbeddingPlan plan_embedding(const Hypergraph& h) {
  EmbeddingPlan plan;
  const int v = h.order();
  plan.order_size = v;
  plan.degree = h.degrees();
  std::vector<bool> placed(v, false);
  std::vector<int> placed_in_edge(h.size(), 0);
  std::vector<std::vector<std::size_t>> incident(v);
  for (std::size_t i = 0; i < h.size(); ++i)
    for (Vertex u : h.edge(i)) incident[u].push_back(i);
  const int k = h.uniformity();
  for (int step = 0; step < v; ++step) {
    int best = -1;
    std::array<long long, 3> best_key{};
    for (int u = 0; u < v; ++u) {
      if (placed[u]) continue;
      long long completing = 0;
      long long touching = 0;
      for (std::size_t e : incident[u]) {
        if (placed_in_edge[e] == k - 1) ++completing;
        if (placed_in_edge[e] > 0) ++touching;
      }
      const std::array<long long, 3> key{completing, touching, plan.degree[u]};
      if (best < 0 || key > best_key) {
        best = u;
        best_key = key;
      }
    }
    placed[best] = true;
    plan.order.push_back(best);
    plan.closing.emplace_back();
    for (std::size_t e : incident[best])
      if (++placed_in_edge[e] == k) plan.closing.back().push_back(h.edge(e));
  }
  return plan;
}

}  // namespace detail

SearchOutcome find_mono_copy(const TwoColoring& c, const Hypergraph& h, Color color, const SearchLimits& limits,
                             const std::vector<VertexMask>& domains) {
  const auto start = std::chrono::steady_clock::now();
  require(h.uniformity() == c.uniformity(), "find_mono_copy: uniformity mismatch");
  require(domains.empty() || static_cast<int>(domains.size()) == h.order(), "find_mono_copy: domain count mismatch");
  const int guard = limits.max_vertices >= 0 ? limits.max_vertices : default_embedding_guard();
  if (h.order() > guard && !limits.allow_inexact)
    throw GuardExceeded("find_mono_copy: v(H) = " + std::to_string(h.order()) + " exceeds guard " +
                        std::to_string(guard));
  SearchOutcome out;
  const int n = c.order();
  if (h.order() > n) return out;

  // Degree pruning: a host vertex must have at least the pattern degree in `color`.
  std::vector<int> host_degree(n, 0);
  for_each_kset(n, c.uniformity(), [&](const KSet& e) {
    if (c.color(e) == color)
      for (Vertex v : e) ++host_degree[v];
  });
  const auto pattern_degree = h.degrees();
  std::vector<VertexMask> dom(h.order(), 0);
  for (int u = 0; u < h.order(); ++u) {
    VertexMask allowed = domains.empty() ? ~VertexMask{0} : domains[u];
    VertexMask m = 0;
    for (int x = 0; x < n; ++x)
      if (host_degree[x] >= pattern_degree[u] && ((allowed >> x) & 1U)) m |= VertexMask{1} << x;
    dom[u] = m;
  }
  const auto plan = detail::plan_embedding(h);
  auto edge_ok = [&c, color](VertexMask mask) { return c.color_of_mask(mask) == color; };
  const std::uint64_t budget = limits.node_budget != 0 ? limits.node_budget
                               : h.order() > guard       ? kDefaultInexactBudget
                                                         : 0;
  detail::Embedder embedder(plan, n, edge_ok, dom, budget);
  bool found = false;
  try {
    found = embedder.run();
  } catch (const detail::BudgetExhausted&) {
    out.exact = false;
  }
  out.stats = embedder.stats();
  out.stats.wall_ms = elapsed_ms(start);
  if (found) {
    Certificate cert;
    cert.kind = CertificateKind::kBlueEmbedding;
    cert.color = color;
    cert.k = c.uniformity();
    cert.mapping = embedder.mapping();
    cert.pattern = h;
    cert.stats = out.stats;
    out.witness = std::move(cert);
  }
  return out;
}

SearchOutcome find_mono_pattern(const TwoColoring& c, const Pattern& p, Color color, const SearchLimits& limits) {
  require(p.uniformity() == c.uniformity(), "pattern uniformity differs from the colouring");
  switch (p.kind()) {
    case Pattern::Kind::kPath: {
      SearchOutcome out;
      if (p.order() > c.order()) return out;
      auto r = longest_mono_ell_path(c, p.ell(), color, limits, p.order());
      out.stats = r.certificate.stats;
      out.exact = r.certificate.exact;
      if (r.vertices >= p.order() && r.edges > 0) {
        r.certificate.sequence.resize(p.order());
        out.witness = std::move(r.certificate);
      }
      return out;
    }
    case Pattern::Kind::kCycle:
      return find_mono_ell_cycle(c, p.ell(), p.order(), color, limits);
    case Pattern::Kind::kGraph:
      return find_mono_copy(c, p.hypergraph(), color, limits);
  }
  throw InternalError("unknown pattern kind");
}

FreenessReport verify_free(const TwoColoring& c, const Pattern& red, const Pattern& blue, const SearchLimits& limits) {
  FreenessReport report;
  auto red_out = find_mono_pattern(c, red, Color::kRed, limits);
  report.red_stats = red_out.stats;
  if (red_out.witness) {
    report.certificate = std::move(*red_out.witness);
    return report;
  }
  auto blue_out = find_mono_pattern(c, blue, Color::kBlue, limits);
  report.blue_stats = blue_out.stats;
  if (blue_out.witness) {
    report.certificate = std::move(*blue_out.witness);
    return report;
  }
  report.free = true;
  report.certificate.kind = CertificateKind::kFree;
  report.certificate.k = c.uniformity();
  report.certificate.red_target = red.label();
  report.certificate.pattern = blue.hypergraph();
  report.certificate.exact = red_out.exact && blue_out.exact;
  report.certificate.stats = red_out.stats;
  report.certificate.stats += blue_out.stats;
  return report;
}

IndependenceResult independence_number(const Hypergraph& h, const SearchLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  const int n = h.order();
  const int guard = limits.max_vertices >= 0 ? limits.max_vertices : default_independence_guard();
  if (n > guard)
    throw GuardExceeded("independence_number: v(H) = " + std::to_string(n) + " exceeds guard " +
                        std::to_string(guard));
  std::vector<std::vector<VertexMask>> closing(n);
  for (VertexMask e : h.edge_masks()) closing[63 - __builtin_clzll(e)].push_back(e);
  SearchStats stats;
  VertexMask best = 0;
  int best_size = 0;
  std::function<void(int, VertexMask, int)> rec = [&](int v, VertexMask set, int size) {
    ++stats.nodes;
    if (size + (n - v) <= best_size) {
      ++stats.prunes;
      return;
    }
    if (v == n) {
      best = set;
      best_size = size;
      return;
    }
    const VertexMask with = set | (VertexMask{1} << v);
    bool independent = true;
    for (VertexMask e : closing[v])
      if ((e & with) == e) {
        independent = false;
        break;
      }
    if (independent) rec(v + 1, with, size + 1);
    rec(v + 1, set, size);
  };
  rec(0, 0, 0);
  IndependenceResult result;
  result.alpha = best_size;
  result.certificate.kind = CertificateKind::kIndependentSet;
  result.certificate.k = h.uniformity();
  result.certificate.sequence = from_mask(best);
  result.certificate.stats = stats;
  result.certificate.stats.wall_ms = elapsed_ms(start);
  return result;
}

std::optional<std::pair<std::size_t, std::size_t>> has_two_edge_loose_path(const Hypergraph& h) {
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = i + 1; j < h.size(); ++j) {
      int common = 0;
      for (Vertex v : h.edge(i)) common += std::binary_search(h.edge(j).begin(), h.edge(j).end(), v);
      if (common == 1) return std::pair{i, j};
    }
  return std::nullopt;
}

namespace {

bool transitive_dfs(const Tournament& t, std::uint32_t candidates, int remaining, std::vector<int>& chain) {
  if (remaining == 0) return true;
  if (__builtin_popcount(candidates) < remaining) return false;
  std::uint32_t cand = candidates;
  while (cand) {
    const int v = __builtin_ctz(cand);
    cand &= cand - 1;
    chain.push_back(v);
    if (transitive_dfs(t, candidates & t.out_mask(v), remaining - 1, chain)) return true;
    chain.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_transitive_subtournament(const Tournament& t, int chi) {
  require(chi >= 0, "find_transitive_subtournament: chi must be nonnegative");
  if (chi > t.order()) return std::nullopt;
  const std::uint32_t all = t.order() == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << t.order()) - 1);
  std::vector<int> chain;
  if (transitive_dfs(t, all, chi, chain)) return chain;
  return std::nullopt;
}

int largest_transitive_subtournament(const Tournament& t) {
  int size = 0;
  while (size < t.order() && find_transitive_subtournament(t, size + 1)) ++size;
  return size;
}

CheckResult validate_mono_path(const TwoColoring& c, int ell, const std::vector<Vertex>& sequence, Color color) {
  const int k = c.uniformity();
  if (ell < 1 || ell > k - 1) return {false, "ell out of range"};
  if (sequence.empty()) return {true, ""};
  const int len = static_cast<int>(sequence.size());
  const int step = k - ell;
  if (len < k || (len - ell) % step != 0) return {false, "sequence length is not ell mod k-ell"};
  VertexMask seen = 0;
  for (Vertex v : sequence) {
    if (v < 0 || v >= c.order()) return {false, "vertex out of range"};
    if ((seen >> v) & 1U) return {false, "repeated vertex"};
    seen |= VertexMask{1} << v;
  }
  for (int start = 0; start + k <= len; start += step) {
    VertexMask e = 0;
    for (int j = 0; j < k; ++j) e |= VertexMask{1} << sequence[start + j];
    if (c.color_of_mask(e) != color)
      return {false, "edge at position " + std::to_string(start) + " is not " + color_name(color)};
  }
  return {true, ""};
}

CheckResult validate_mono_cycle(const TwoColoring& c, int ell, const std::vector<Vertex>& sequence, Color color) {
  const int k = c.uniformity();
  if (ell < 1 || ell > k - 1) return {false, "ell out of range"};
  const int p = static_cast<int>(sequence.size());
  try {
    ell_cycle(k, ell, p);
  } catch (const InvalidInput& e) {
    return {false, e.what()};
  }
  VertexMask seen = 0;
  for (Vertex v : sequence) {
    if (v < 0 || v >= c.order()) return {false, "vertex out of range"};
    if ((seen >> v) & 1U) return {false, "repeated vertex"};
    seen |= VertexMask{1} << v;
  }
  const int step = k - ell;
  for (int start = 0; start < p; start += step) {
    VertexMask e = 0;
    for (int j = 0; j < k; ++j) e |= VertexMask{1} << sequence[(start + j) % p];
    if (c.color_of_mask(e) != color)
      return {false, "edge at position " + std::to_string(start) + " is not " + color_name(color)};
  }
  return {true, ""};
}

CheckResult validate_embedding(const TwoColoring& c, const Hypergraph& h, const std::vector<Vertex>& mapping,
                               Color color) {
  if (h.uniformity() != c.uniformity()) return {false, "uniformity mismatch"};
  if (static_cast<int>(mapping.size()) != h.order()) return {false, "mapping size differs from v(H)"};
  VertexMask seen = 0;
  for (Vertex v : mapping) {
    if (v < 0 || v >= c.order()) return {false, "image out of range"};
    if ((seen >> v) & 1U) return {false, "mapping is not injective"};
    seen |= VertexMask{1} << v;
  }
  for (const auto& e : h.edges()) {
    VertexMask image = 0;
    for (Vertex u : e) image |= VertexMask{1} << mapping[u];
    if (c.color_of_mask(image) != color) return {false, std::string("an edge image is not ") + color_name(color)};
  }
  return {true, ""};
}

CheckResult validate_independent_set(const Hypergraph& h, const std::vector<Vertex>& set) {
  VertexMask mask = 0;
  for (Vertex v : set) {
    if (v < 0 || v >= h.order()) return {false, "vertex out of range"};
    if ((mask >> v) & 1U) return {false, "repeated vertex"};
    mask |= VertexMask{1} << v;
  }
  for (VertexMask e : h.edge_masks())
    if ((e & mask) == e) return {false, "set contains an edge"};
  return {true, ""};
}

CheckResult validate_transitive(const Tournament& t, const std::vector<int>& order) {
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] < 0 || order[i] >= t.order()) return {false, "vertex out of range"};
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (order[i] == order[j]) return {false, "repeated vertex"};
      if (!t.has_arc(order[i], order[j])) return {false, "arc points backwards"};
    }
  }
  return {true, ""};
}

}  // namespace rgood
