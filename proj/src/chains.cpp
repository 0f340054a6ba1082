#include "rgood/chains.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "rgood/error.hpp"
#include "rgood/generators.hpp"

namespace rgood {

namespace {

int positive_mod(long long a, long long m) { return static_cast<int>(((a % m) + m) % m); }

bool is_red_clique(const TwoColoring& c, const std::vector<Vertex>& vertices) {
  std::vector<Vertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  bool ok = true;
  for_each_subset_of(sorted, c.uniformity(), [&](const KSet& s) {
    if (ok && c.color(s) != Color::kRed) ok = false;
  });
  return ok;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) { return parent_[x] == x ? x : parent_[x] = find(parent_[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

ChainValidation validate_chain(const CliqueChain& chain, const TwoColoring* coloring) {
  ChainValidation out;
  auto fail = [&out](std::string message) {
    out.ok = false;
    out.violations.push_back(std::move(message));
  };
  const int k = chain.k;
  const int ell = chain.ell;
  const int p = static_cast<int>(chain.vertices.size());
  const int d = static_cast<int>(chain.intervals.size());
  if (k < 2 || ell < 1 || ell > k - 1) {
    fail("parameters need k >= 2 and 1 <= ell <= k-1");
    return out;
  }
  if (d == 0 || p == 0) {
    fail("chain has no intervals");
    return out;
  }
  const int step = k - ell;
  VertexMask seen = 0;
  for (Vertex v : chain.vertices) {
    if (v < 0 || v >= 64 || (coloring != nullptr && v >= coloring->order())) {
      fail("vertex " + std::to_string(v) + " out of range");
      return out;
    }
    if ((seen >> v) & 1U) fail("vertex " + std::to_string(v) + " repeated");
    seen |= VertexMask{1} << v;
  }
  for (int j = 0; j < d; ++j) {
    const auto& iv = chain.intervals[j];
    const std::string name = "interval " + std::to_string(j);
    if (iv.start < 0 || iv.start >= p) fail(name + " starts outside the vertex list");
    if (iv.length < k) fail(name + " has fewer than k positions");
    if (iv.length > p) fail(name + " is longer than the vertex list");
  }
  if (!out.ok) return out;

  if (chain.closed && d == 1) {
    out.trivial = true;
    if (chain.intervals[0].length != p) fail("a one-element closed chain must span the whole list");
    if (p % step != 0) fail("a one-element closed chain needs p divisible by k-ell");
  } else {
    for (int j = 0; j < d; ++j) {
      const auto& iv = chain.intervals[j];
      if ((iv.length - ell) % step != 0)
        fail("interval " + std::to_string(j) + " has length not congruent to ell mod k-ell");
    }
    const int junctions = chain.closed ? d : d - 1;
    for (int j = 0; j < junctions; ++j) {
      const auto& a = chain.intervals[j];
      const auto& b = chain.intervals[(j + 1) % d];
      const int overlap = chain.closed ? positive_mod(a.start + a.length - b.start, p)
                                       : a.start + a.length - b.start;
      if (overlap != ell)
        fail("intervals " + std::to_string(j) + " and " + std::to_string((j + 1) % d) + " overlap in " +
             std::to_string(overlap) + " positions instead of " + std::to_string(ell));
    }
    if (chain.closed) {
      long long total = 0;
      for (const auto& iv : chain.intervals) total += iv.length - ell;
      if (total != p) fail("closed chain intervals do not wind around the list exactly once");
    } else {
      if (chain.intervals.front().start != 0) fail("open chain must start at position 0");
      const auto& last = chain.intervals.back();
      if (last.start + last.length != p) fail("open chain must end at the last position");
    }
  }
  if (!out.ok) return out;

  std::vector<int> cover(p, 0);
  out.flexible.assign(d, false);
  for (int j = 0; j < d; ++j) {
    const auto& iv = chain.intervals[j];
    for (int i = 0; i < iv.length; ++i) ++cover[(iv.start + i) % p];
    out.flexible[j] = iv.length > std::max(k, 2 * ell);
  }
  out.spine.assign(p, false);
  for (int i = 0; i < p; ++i) {
    if (cover[i] == 0) fail("position " + std::to_string(i) + " is not covered");
    out.spine[i] = cover[i] >= 2;
  }
  if (coloring != nullptr) {
    if (coloring->uniformity() != k) {
      fail("colouring uniformity differs from the chain");
      return out;
    }
    const auto elements = chain_elements(chain);
    for (int j = 0; j < d; ++j)
      if (!is_red_clique(*coloring, elements[j])) fail("element " + std::to_string(j) + " is not a red clique");
  }
  return out;
}

std::vector<std::vector<Vertex>> chain_elements(const CliqueChain& chain) {
  const int p = static_cast<int>(chain.vertices.size());
  std::vector<std::vector<Vertex>> out;
  for (const auto& iv : chain.intervals) {
    std::vector<Vertex> element;
    for (int i = 0; i < iv.length; ++i) element.push_back(chain.vertices[(iv.start + i) % p]);
    out.push_back(std::move(element));
  }
  return out;
}

CliqueChain chain_from_elements(const std::vector<std::vector<Vertex>>& elements, int k, int ell, bool closed) {
  require(!elements.empty(), "chain_from_elements: no elements");
  CliqueChain chain;
  chain.k = k;
  chain.ell = ell;
  chain.closed = closed;
  const int d = static_cast<int>(elements.size());
  if (closed && d == 1) {
    chain.vertices = elements[0];
    chain.intervals.push_back({0, static_cast<int>(elements[0].size())});
    return chain;
  }
  long long total = 0;
  for (const auto& e : elements) {
    require(static_cast<int>(e.size()) > ell, "chain_from_elements: element shorter than ell + 1");
    total += static_cast<long long>(e.size()) - ell;
  }
  const int p = static_cast<int>(closed ? total : total + ell);
  chain.vertices.assign(p, -1);
  int start = 0;
  for (int j = 0; j < d; ++j) {
    const auto& e = elements[j];
    chain.intervals.push_back({start, static_cast<int>(e.size())});
    for (std::size_t i = 0; i < e.size(); ++i) {
      const int pos = static_cast<int>((start + static_cast<long long>(i)) % p);
      if (chain.vertices[pos] == -1) {
        chain.vertices[pos] = e[i];
      } else if (chain.vertices[pos] != e[i]) {
        throw InvalidInput(j + 1 == d && closed && start + static_cast<long long>(i) >= p
                               ? "chain_from_elements: last element does not wrap onto the first"
                               : "chain_from_elements: element " + std::to_string(j) +
                                     " does not continue its predecessor");
      }
    }
    start += static_cast<int>(e.size()) - ell;
  }
  return chain;
}

std::vector<Vertex> spanning_path(const CliqueChain& chain) {
  const auto check = validate_chain(chain);
  if (!check.ok) throw InvalidInput("spanning_path: invalid chain: " + check.violations.front());
  if (!chain.closed) return chain.vertices;
  // Windows must start where intervals start, so rotate to the first interval.
  std::vector<Vertex> out(chain.vertices.size());
  const int p = static_cast<int>(chain.vertices.size());
  const int offset = chain.intervals.front().start;
  for (int i = 0; i < p; ++i) out[i] = chain.vertices[(offset + i) % p];
  return out;
}

std::optional<CliqueChain> cut_open(const CliqueChain& chain) {
  const auto check = validate_chain(chain);
  if (!check.ok) throw InvalidInput("cut_open: invalid chain: " + check.violations.front());
  if (!chain.closed) return chain;
  const int k = chain.k;
  const int ell = chain.ell;
  const int step = k - ell;
  auto elements = chain_elements(chain);
  if (check.trivial) {
    int size = static_cast<int>(elements[0].size());
    while (size >= k && (size - ell) % step != 0) --size;
    if (size < k) return std::nullopt;
    elements[0].resize(size);
    return chain_from_elements(elements, k, ell, false);
  }
  const int d = static_cast<int>(elements.size());
  for (int j = 0; j < d; ++j) {
    if (!check.flexible[j]) continue;
    const auto& e = elements[j];
    const int middle = static_cast<int>(e.size()) - 2 * ell;
    auto split = [&](int head) -> std::optional<std::pair<int, int>> {
      head -= head % step;
      int tail = middle - head;
      tail -= tail % step;
      if (ell + head < k || ell + tail < k) return std::nullopt;
      return std::pair{head, tail};
    };
    auto sizes = split(middle / 2);
    if (!sizes) {
      const int min_head = ((k - ell) + step - 1) / step * step;
      sizes = split(min_head);
    }
    if (!sizes) continue;
    const auto [head, tail] = *sizes;
    std::vector<Vertex> first(e.end() - ell - tail, e.end());
    std::vector<Vertex> last(e.begin(), e.begin() + ell + head);
    std::vector<std::vector<Vertex>> open{first};
    for (int i = 1; i < d; ++i) open.push_back(elements[(j + i) % d]);
    open.push_back(last);
    return chain_from_elements(open, k, ell, false);
  }
  return std::nullopt;
}

Certificate chain_certificate(const CliqueChain& chain) {
  Certificate cert;
  cert.kind = CertificateKind::kChain;
  cert.color = Color::kRed;
  cert.k = chain.k;
  cert.ell = chain.ell;
  cert.sequence = chain.vertices;
  cert.intervals = chain.intervals;
  cert.closed = chain.closed;
  return cert;
}

CliqueChain chain_from_certificate(const Certificate& cert) {
  CliqueChain chain;
  chain.k = cert.k;
  chain.ell = cert.ell;
  chain.closed = cert.closed;
  chain.vertices = cert.sequence;
  chain.intervals = cert.intervals;
  return chain;
}

CliquePartition clique_partition(const TwoColoring& c, int red_size, int blue_size, const SearchLimits& limits) {
  const int k = c.uniformity();
  require(red_size >= k && blue_size >= k, "clique_partition: clique sizes must be at least k");
  CliquePartition out;
  std::vector<Vertex> remaining(c.order());
  std::iota(remaining.begin(), remaining.end(), 0);
  const Hypergraph red_clique = complete_hypergraph(k, red_size);
  const Hypergraph blue_clique = complete_hypergraph(k, blue_size);
  while (true) {
    const TwoColoring sub = c.induced(remaining);
    std::optional<MonoBlock> block;
    for (const auto& [color, clique] : {std::pair{Color::kRed, &red_clique}, std::pair{Color::kBlue, &blue_clique}}) {
      auto found = find_mono_copy(sub, *clique, color, limits);
      out.stats += found.stats;
      if (found.witness) {
        MonoBlock b{color, {}};
        for (Vertex local : found.witness->mapping) b.vertices.push_back(remaining[local]);
        std::sort(b.vertices.begin(), b.vertices.end());
        block = std::move(b);
        break;
      }
    }
    if (!block) break;
    std::vector<Vertex> rest;
    std::set_difference(remaining.begin(), remaining.end(), block->vertices.begin(), block->vertices.end(),
                        std::back_inserter(rest));
    remaining = std::move(rest);
    out.blocks.push_back(std::move(*block));
  }
  out.leftover = remaining;
  return out;
}

std::vector<int> double_tree_walk(int n, const std::vector<std::pair<int, int>>& tree_edges) {
  require(n >= 1, "double_tree_walk: empty tree");
  if (static_cast<int>(tree_edges.size()) != n - 1) throw InvalidInput("double_tree_walk: input is not a tree");
  std::vector<std::vector<int>> adj(n);
  UnionFind uf(n);
  for (auto [a, b] : tree_edges) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw InvalidInput("double_tree_walk: bad edge");
    if (!uf.unite(a, b)) throw InvalidInput("double_tree_walk: input is not a tree");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  std::vector<int> walk;
  std::function<void(int, int)> visit = [&](int v, int parent) {
    walk.push_back(v);
    for (int w : adj[v]) {
      if (w == parent) continue;
      visit(w, v);
      walk.push_back(v);
    }
  };
  visit(0, -1);
  return walk;
}

int connector_edges(int k, int ell) { return (ell + (k - ell) - 1) / (k - ell); }

namespace {

struct ConnectorFinder {
  const TwoColoring& c;
  int k;
  int ell;
  int length;
  const std::vector<int>& block_of;
  const std::vector<int>& usage;
  const std::vector<int>& capacity;
  SearchStats& stats;

  // Enumerates connectors from block x to block y over vertices outside `used`
  // and returns the first vertex-disjoint pair respecting block capacities.
  std::optional<std::array<std::vector<Vertex>, 2>> find_pair(const std::vector<Vertex>& from,
                                                              const std::vector<Vertex>& to, VertexMask used) {
    std::vector<std::pair<VertexMask, std::vector<Vertex>>> found;
    std::vector<Vertex> seq(length);
    std::optional<std::array<std::vector<Vertex>, 2>> result;
    const VertexMask start_set = to_mask(from);
    const VertexMask end_set = to_mask(to);
    const int step = k - ell;
    std::function<bool(int, VertexMask)> rec = [&](int pos, VertexMask path_mask) -> bool {
      ++stats.nodes;
      if (pos >= k && (pos - k) % step == 0) {
        VertexMask e = 0;
        for (int j = pos - k; j < pos; ++j) e |= VertexMask{1} << seq[j];
        if (c.color_of_mask(e) != Color::kRed) {
          ++stats.prunes;
          return false;
        }
      }
      if (pos == length) return accept(path_mask, seq, found, result);
      VertexMask allowed = ~(used | path_mask);
      if (pos < ell) allowed &= start_set;
      if (pos >= length - ell) allowed &= end_set;
      allowed &= c.order() >= 64 ? ~VertexMask{0} : ((VertexMask{1} << c.order()) - 1);
      while (allowed) {
        const int v = __builtin_ctzll(allowed);
        allowed &= allowed - 1;
        seq[pos] = v;
        if (rec(pos + 1, path_mask | (VertexMask{1} << v))) return true;
      }
      return false;
    };
    rec(0, 0);
    return result;
  }

  bool fits(VertexMask mask) const {
    std::vector<int> extra(capacity.size(), 0);
    for (VertexMask m = mask; m; m &= m - 1) {
      const int b = block_of[__builtin_ctzll(m)];
      if (b >= 0 && usage[b] + ++extra[b] > capacity[b]) return false;
    }
    return true;
  }

  bool accept(VertexMask mask, const std::vector<Vertex>& seq,
              std::vector<std::pair<VertexMask, std::vector<Vertex>>>& found,
              std::optional<std::array<std::vector<Vertex>, 2>>& result) {
    if (!fits(mask)) return false;
    for (const auto& [other_mask, other_seq] : found) {
      if ((other_mask & mask) != 0 || !fits(other_mask | mask)) continue;
      result = std::array<std::vector<Vertex>, 2>{other_seq, seq};
      return true;
    }
    found.emplace_back(mask, seq);
    return false;
  }
};

struct SystemState {
  std::vector<int> block_of;
  std::vector<int> usage;
  std::vector<int> capacity;
  VertexMask used = 0;
};

SystemState system_state(const TwoColoring& c, const PathSystem& system, double epsilon) {
  SystemState s;
  s.block_of.assign(c.order(), -1);
  for (std::size_t b = 0; b < system.blocks.size(); ++b)
    for (Vertex v : system.blocks[b]) s.block_of[v] = static_cast<int>(b);
  s.usage.assign(system.blocks.size(), 0);
  for (const auto& blocks : system.blocks)
    s.capacity.push_back(static_cast<int>(epsilon * static_cast<double>(blocks.size()) + 1e-9));
  for (const auto& pair : system.paths)
    for (const auto& path : pair)
      for (Vertex v : path) {
        s.used |= VertexMask{1} << v;
        if (s.block_of[v] >= 0) ++s.usage[s.block_of[v]];
      }
  return s;
}

}  // namespace

PathSystem build_path_system(const TwoColoring& c, const std::vector<std::vector<Vertex>>& blocks, int ell,
                             int target_components, double epsilon) {
  const int k = c.uniformity();
  require(ell >= 1 && ell <= k - 1, "build_path_system: need 1 <= ell <= k-1");
  require(epsilon >= 0.0 && epsilon <= 1.0, "build_path_system: epsilon must lie in [0,1]");
  PathSystem system;
  system.k = k;
  system.ell = ell;
  system.blocks = blocks;
  VertexMask all = 0;
  for (const auto& b : blocks) {
    for (Vertex v : b) {
      if (v < 0 || v >= c.order()) throw InvalidInput("build_path_system: block vertex out of range");
      if ((all >> v) & 1U) throw InvalidInput("build_path_system: blocks are not disjoint");
      all |= VertexMask{1} << v;
    }
    if (!is_red_clique(c, b)) throw InvalidInput("build_path_system: a block is not a red clique");
  }
  const int t = static_cast<int>(blocks.size());
  UnionFind uf(t);
  const int length = ell + connector_edges(k, ell) * (k - ell);
  bool progress = true;
  while (progress) {
    progress = false;
    SystemState state = system_state(c, system, epsilon);
    ConnectorFinder finder{c, k, ell, length, state.block_of, state.usage, state.capacity, system.stats};
    for (int x = 0; x < t && !progress; ++x)
      for (int y = x + 1; y < t && !progress; ++y) {
        if (uf.find(x) == uf.find(y)) continue;
        auto pair = finder.find_pair(blocks[x], blocks[y], state.used);
        if (!pair) continue;
        system.forest.emplace_back(x, y);
        system.paths.push_back(std::move(*pair));
        uf.unite(x, y);
        progress = true;
      }
  }
  std::vector<bool> root(t, false);
  for (int b = 0; b < t; ++b) root[uf.find(b)] = true;
  system.components = static_cast<int>(std::count(root.begin(), root.end(), true));
  system.stalled = system.components >= target_components;
  if (system.stalled)
    system.diagnostic = "no two vertex-disjoint red connectors join distinct components; " +
                        std::to_string(system.components) + " components remain (target below " +
                        std::to_string(target_components) + ")";
  return system;
}

bool path_system_extendable(const TwoColoring& c, const PathSystem& system, double epsilon) {
  const int t = static_cast<int>(system.blocks.size());
  UnionFind uf(t);
  for (auto [x, y] : system.forest) uf.unite(x, y);
  SystemState state = system_state(c, system, epsilon);
  SearchStats scratch;
  const int length = system.ell + connector_edges(system.k, system.ell) * (system.k - system.ell);
  ConnectorFinder finder{c, system.k, system.ell, length, state.block_of, state.usage, state.capacity, scratch};
  for (int x = 0; x < t; ++x)
    for (int y = x + 1; y < t; ++y)
      if (uf.find(x) != uf.find(y) && finder.find_pair(system.blocks[x], system.blocks[y], state.used)) return true;
  return false;
}

CheckResult validate_path_system(const TwoColoring& c, const PathSystem& system, double epsilon) {
  const int t = static_cast<int>(system.blocks.size());
  if (system.forest.size() != system.paths.size()) return {false, "forest and path lists differ in size"};
  UnionFind uf(t);
  for (auto [x, y] : system.forest) {
    if (x < 0 || y < 0 || x >= t || y >= t || x == y) return {false, "forest edge out of range"};
    if (!uf.unite(x, y)) return {false, "forest contains a cycle"};
  }
  const int ell = system.ell;
  const int length = ell + connector_edges(system.k, ell) * (system.k - ell);
  VertexMask seen = 0;
  for (std::size_t e = 0; e < system.forest.size(); ++e) {
    const auto& from = system.blocks[system.forest[e].first];
    const auto& to = system.blocks[system.forest[e].second];
    for (const auto& path : system.paths[e]) {
      if (static_cast<int>(path.size()) != length) return {false, "connector has the wrong order"};
      auto check = validate_mono_path(c, ell, path, Color::kRed);
      if (!check.ok) return check;
      for (int i = 0; i < ell; ++i) {
        if (std::find(from.begin(), from.end(), path[i]) == from.end())
          return {false, "connector does not start in its first block"};
        if (std::find(to.begin(), to.end(), path[length - ell + i]) == to.end())
          return {false, "connector does not end in its second block"};
      }
      for (Vertex v : path) {
        if ((seen >> v) & 1U) return {false, "connectors are not vertex-disjoint"};
        seen |= VertexMask{1} << v;
      }
    }
  }
  const SystemState state = system_state(c, system, epsilon);
  for (int b = 0; b < t; ++b)
    if (state.usage[b] > state.capacity[b]) return {false, "block " + std::to_string(b) + " exceeds its usage cap"};
  return {true, ""};
}

ChainAssembly assemble_chains(const TwoColoring& c, const PathSystem& system) {
  const int k = system.k;
  const int ell = system.ell;
  const int step = k - ell;
  const int t = static_cast<int>(system.blocks.size());
  ChainAssembly out;
  VertexMask used = 0;
  for (const auto& pair : system.paths)
    for (const auto& path : pair)
      for (Vertex v : path) used |= VertexMask{1} << v;
  auto available = [&](int b) {
    std::vector<Vertex> free;
    for (Vertex v : system.blocks[b])
      if (!((used >> v) & 1U)) free.push_back(v);
    std::sort(free.begin(), free.end());
    return free;
  };
  UnionFind uf(t);
  for (auto [x, y] : system.forest) uf.unite(x, y);
  std::map<int, std::vector<int>> components;
  for (int b = 0; b < t; ++b) components[uf.find(b)].push_back(b);

  int total_block_vertices = 0;
  for (const auto& b : system.blocks) total_block_vertices += static_cast<int>(b.size());
  int covered = 0;
  VertexMask in_chain = 0;

  for (const auto& [root, members] : components) {
    std::vector<std::size_t> edges;
    for (std::size_t e = 0; e < system.forest.size(); ++e)
      if (uf.find(system.forest[e].first) == root) edges.push_back(e);
    std::vector<std::vector<Vertex>> elements;
    bool closed_trivial = false;
    if (edges.empty()) {
      auto free = available(members[0]);
      int p = static_cast<int>(free.size());
      while (p > k) {
        if (p % step == 0) {
          try {
            ell_cycle(k, ell, p);
            break;
          } catch (const InvalidInput&) {
          }
        }
        --p;
      }
      if (p <= k) continue;
      free.resize(p);
      elements.push_back(free);
      closed_trivial = true;
    } else {
      std::map<int, int> local;
      for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
      std::vector<std::pair<int, int>> tree;
      for (std::size_t e : edges) tree.emplace_back(local[system.forest[e].first], local[system.forest[e].second]);
      const auto walk = double_tree_walk(static_cast<int>(members.size()), tree);
      const int steps = static_cast<int>(walk.size()) - 1;
      std::vector<std::vector<Vertex>> step_paths(steps);
      std::map<std::size_t, int> traversals;
      for (int i = 0; i < steps; ++i) {
        const int a = members[walk[i]];
        const int b = members[walk[i + 1]];
        std::size_t edge = 0;
        for (std::size_t e : edges)
          if ((system.forest[e].first == a && system.forest[e].second == b) ||
              (system.forest[e].first == b && system.forest[e].second == a))
            edge = e;
        auto path = system.paths[edge][traversals[edge]++];
        if (system.forest[edge].first != a) std::reverse(path.begin(), path.end());
        step_paths[i] = std::move(path);
      }
      int min_filler = std::max(0, k - 2 * ell);
      while ((ell + min_filler) % step != 0) ++min_filler;
      std::map<int, std::vector<Vertex>> pool;
      for (int b : members) pool[b] = available(b);
      std::vector<std::vector<Vertex>> filler(steps);
      std::vector<bool> first_visit(steps, false);
      std::map<int, bool> visited;
      for (int i = 0; i < steps; ++i) {
        const int b = members[walk[i]];
        if (!visited[b]) {
          visited[b] = true;
          first_visit[i] = true;
        }
      }
      for (int i = 0; i < steps; ++i) {
        if (first_visit[i]) continue;
        auto& free = pool[members[walk[i]]];
        if (static_cast<int>(free.size()) < min_filler)
          throw InvalidInput("assemble_chains: block too small to host its in-block segments");
        filler[i].assign(free.begin(), free.begin() + min_filler);
        free.erase(free.begin(), free.begin() + min_filler);
      }
      for (int i = 0; i < steps; ++i) {
        if (!first_visit[i]) continue;
        auto& free = pool[members[walk[i]]];
        int f = static_cast<int>(free.size());
        while (f >= 0 && (ell + f) % step != 0) --f;
        if (f < min_filler) throw InvalidInput("assemble_chains: block too small to host its in-block segments");
        filler[i].assign(free.begin(), free.begin() + f);
        free.erase(free.begin(), free.begin() + f);
      }
      for (int i = 0; i < steps; ++i) {
        const auto& arrival_path = step_paths[(i + steps - 1) % steps];
        const auto& departure_path = step_paths[i];
        std::vector<Vertex> element(arrival_path.end() - ell, arrival_path.end());
        element.insert(element.end(), filler[i].begin(), filler[i].end());
        element.insert(element.end(), departure_path.begin(), departure_path.begin() + ell);
        elements.push_back(std::move(element));
        for (std::size_t w = 0; w + k <= departure_path.size(); w += step)
          elements.emplace_back(departure_path.begin() + w, departure_path.begin() + w + k);
      }
    }
    CliqueChain chain = chain_from_elements(elements, k, ell, true);
    const auto check = validate_chain(chain, &c);
    if (!check.ok || check.trivial != closed_trivial)
      throw InternalError("assemble_chains: built an invalid chain: " +
                          (check.violations.empty() ? std::string("trivial flag mismatch") : check.violations.front()));
    for (Vertex v : chain.vertices) {
      in_chain |= VertexMask{1} << v;
    }
    out.chains.push_back(std::move(chain));
  }
  for (const auto& b : system.blocks)
    for (Vertex v : b) covered += (in_chain >> v) & 1U;
  out.leftover = total_block_vertices - covered;
  return out;
}

}  // namespace rgood
