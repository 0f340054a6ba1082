#include "rgood/constructions.hpp"

#include <algorithm>

#include "rgood/error.hpp"
#include "rgood/generators.hpp"
#include "rgood/search.hpp"

namespace rgood {

namespace {

std::vector<int> block_index(const std::vector<std::vector<Vertex>>& blocks, int n) {
  std::vector<int> index(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (Vertex v : blocks[b]) index[v] = static_cast<int>(b);
  return index;
}

// Number of vertices of `e` in each block.
std::vector<int> block_counts(const KSet& e, const std::vector<int>& index, int blocks) {
  std::vector<int> counts(blocks, 0);
  for (Vertex v : e) ++counts[index[v]];
  return counts;
}

int total(const std::vector<int>& sizes) {
  int sum = 0;
  for (int s : sizes) sum += s;
  return sum;
}

void check_order(long long n) {
  if (n > 64) throw InvalidInput("construction needs " + std::to_string(n) + " vertices; at most 64 are supported");
}

void check_j(int k, int t, const Hypergraph& j) {
  if (j.uniformity() != k - 1) throw InvalidInput("J must be (k-1)-uniform");
  if (has_two_edge_loose_path(j)) throw InvalidInput("J contains a loose path of length two");
  SearchLimits limits;
  limits.max_vertices = std::max(default_independence_guard(), j.order());
  if (independence_number(j, limits).alpha >= t) throw InvalidInput("J has independence number at least t");
}

}  // namespace

long long LowerBoundInstance::parameter(const std::string& name) const {
  for (const auto& [key, value] : parameters)
    if (key == name) return value;
  throw InvalidInput("instance has no parameter '" + name + "'");
}

bool LowerBoundInstance::has_flag(const std::string& flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

std::vector<std::vector<Vertex>> consecutive_blocks(const std::vector<int>& sizes) {
  std::vector<std::vector<Vertex>> blocks;
  Vertex next = 0;
  for (int size : sizes) {
    require(size >= 0, "block sizes must be nonnegative");
    std::vector<Vertex> block(size);
    for (auto& v : block) v = next++;
    blocks.push_back(std::move(block));
  }
  return blocks;
}

TwoColoring coloring_from_rule(int k, int n, const std::function<bool(const KSet&)>& is_red) {
  TwoColoring c(k, n);
  std::uint64_t rank = 0;
  for_each_kset(n, k, [&](const KSet& e) {
    if (is_red(e)) c.set_at(rank, Color::kRed);
    ++rank;
  });
  return c;
}

LowerBoundInstance burr_coloring(int k, int chi, int sigma, int vg) {
  require(k >= 2 && chi >= 1 && sigma >= 1, "burr_coloring needs k >= 2, chi >= 1, sigma >= 1");
  require(vg >= sigma, "burr_coloring needs vG >= sigma");
  const long long n = static_cast<long long>(vg - 1) * (chi - 1) + sigma - 1;
  check_order(n);
  std::vector<int> sizes(chi - 1, vg - 1);
  sizes.push_back(sigma - 1);
  LowerBoundInstance inst;
  inst.construction = "burr";
  inst.partition = consecutive_blocks(sizes);
  const auto index = block_index(inst.partition, static_cast<int>(n));
  inst.coloring = coloring_from_rule(k, static_cast<int>(n), [&](const KSet& e) {
    return std::all_of(e.begin(), e.end(), [&](Vertex v) { return index[v] == index[e[0]]; });
  });
  inst.parameters = {{"k", k}, {"chi", chi}, {"sigma", sigma}, {"vG", vg}, {"N", n}};
  if (n < k) inst.flags.push_back("no_k_sets");
  return inst;
}

LowerBoundInstance ell_path_lb(int k, int ell, int n, int chi) {
  require(k >= 3 && ell >= 2 && ell <= k - 1, "ell_path_lb needs k >= 3 and 2 <= ell <= k-1");
  require(chi >= 2, "ell_path_lb needs chi >= 2");
  require(n >= k && (n - ell) % (k - ell) == 0, "ell_path_lb needs n >= k and n = ell mod k-ell");
  const int last = n / k - 1;
  require(last >= 0, "ell_path_lb: last block would have negative size");
  std::vector<int> sizes(chi - 1, n - 1);
  sizes.push_back(last);
  const int order = total(sizes);
  check_order(order);
  LowerBoundInstance inst;
  inst.construction = "ell_path_lb";
  inst.partition = consecutive_blocks(sizes);
  const auto index = block_index(inst.partition, order);
  inst.coloring = coloring_from_rule(k, order, [&](const KSet& e) {
    const auto counts = block_counts(e, index, chi);
    if (std::find(counts.begin(), counts.end(), k) != counts.end()) return true;
    if (counts[chi - 1] == 0) return false;
    for (int b = 0; b < chi - 1; ++b)
      if (counts[b] > ell - 1) return false;
    return true;
  });
  inst.parameters = {{"k", k}, {"ell", ell}, {"n", n}, {"chi", chi}, {"N", order}};
  inst.red_target = Pattern::path(k, ell, n);
  inst.blue_target = Pattern::graph(complete_hypergraph(k, chi * (k - 1)),
                                    "clique:" + std::to_string(k) + ":" + std::to_string(chi * (k - 1)));
  return inst;
}

Hypergraph near_class_target(int k, int chi, int t, int bound) {
  std::vector<int> sizes(chi - 1, (chi - 1) * (k - 2) + bound + 1);
  sizes.push_back(t);
  return near_class_hypergraph(k, sizes).graph;
}

namespace {

// Shared by the loose-path construction and the tau variant of the loose-cycle
// construction: blocks sizes[0..r-1] are red cliques except the last, which
// carries J; block r-2 is the attaching block.
LowerBoundInstance attach_j(const std::vector<int>& sizes, int k, const Hypergraph& j) {
  LowerBoundInstance inst;
  inst.partition = consecutive_blocks(sizes);
  const int order = total(sizes);
  check_order(order);
  const int r = static_cast<int>(sizes.size());
  const auto index = block_index(inst.partition, order);
  const Vertex j_offset = inst.partition.back().empty() ? order : inst.partition.back().front();
  inst.coloring = coloring_from_rule(k, order, [&](const KSet& e) {
    const auto counts = block_counts(e, index, r);
    for (int b = 0; b < r - 1; ++b)
      if (counts[b] == k) return true;
    if (counts[r - 2] != 1 || counts[r - 1] != k - 1) return false;
    KSet rest;
    for (Vertex v : e)
      if (index[v] == r - 1) rest.push_back(v - j_offset);
    return j.has_edge(rest);
  });
  return inst;
}

}  // namespace

LowerBoundInstance loose_path_lb(int k, int chi, int n, int t, const Hypergraph& j) {
  require(k >= 3 && chi >= 2 && t >= 1, "loose_path_lb needs k >= 3, chi >= 2, t >= 1");
  require(n >= 2 * k - 1 && (n - 1) % (k - 1) == 0, "loose_path_lb needs n = 1 mod k-1 and n >= 2k-1");
  check_j(k, t, j);
  std::vector<int> sizes(chi - 2, n - 1);
  sizes.push_back(n - 2 * k + 1);
  sizes.push_back(j.order());
  LowerBoundInstance inst = attach_j(sizes, k, j);
  inst.construction = "loose_path_lb";
  inst.parameters = {{"k", k}, {"chi", chi}, {"n", n}, {"t", t}, {"J_order", j.order()}, {"N", total(sizes)}};
  inst.red_target = Pattern::path(k, 1, n);
  inst.blue_target = Pattern::graph(near_class_target(k, chi, t, 2 * t - 2), "near_class");
  return inst;
}

LowerBoundInstance loose_cycle_lb(int k, int chi, int n, int t, LooseCycleVariant variant, int q,
                                  const std::optional<Hypergraph>& j) {
  require(k >= 3 && chi >= 2 && t >= 1, "loose_cycle_lb needs k >= 3, chi >= 2, t >= 1");
  require(n >= 3 * (k - 1) && n % (k - 1) == 0, "loose_cycle_lb needs n = 0 mod k-1 and n >= 3(k-1)");
  LowerBoundInstance inst;
  if (variant == LooseCycleVariant::kTau) {
    const Hypergraph supplier = j ? *j : tau_lower_construction(k - 1, t).graph;
    check_j(k, t, supplier);
    std::vector<int> sizes(chi - 1, n - 1);
    sizes.push_back(supplier.order());
    inst = attach_j(sizes, k, supplier);
    inst.construction = "loose_cycle_lb";
    inst.parameters = {{"k", k}, {"chi", chi}, {"n", n}, {"t", t}, {"J_order", supplier.order()},
                       {"N", total(sizes)}};
    inst.flags.push_back("variant_tau");
    inst.flags.push_back("reconstructed");
    inst.blue_target = Pattern::graph(near_class_target(k, chi, t, 2 * t - 2), "near_class");
  } else {
    require(q >= k - 1, "loose_cycle_lb pencil variant needs q >= k-1");
    const auto pencils = binomial(q, k - 1);
    if (static_cast<std::uint64_t>(chi) <= pencils)
      throw InvalidInput("loose_cycle_lb pencil variant needs chi > C(q, k-1)");
    std::vector<int> sizes(chi - 1, n - 1);
    sizes.push_back(q);
    inst.partition = consecutive_blocks(sizes);
    const int order = total(sizes);
    check_order(order);
    const auto index = block_index(inst.partition, order);
    const Vertex offset = inst.partition.back().front();
    inst.coloring = coloring_from_rule(k, order, [&](const KSet& e) {
      const auto counts = block_counts(e, index, chi);
      for (int b = 0; b < chi - 1; ++b)
        if (counts[b] == k) return true;
      for (int b = 0; b < chi - 1; ++b) {
        if (counts[b] != 1 || counts[chi - 1] != k - 1) continue;
        KSet rest;
        for (Vertex v : e)
          if (index[v] == chi - 1) rest.push_back(v - offset);
        return static_cast<int>(colex_rank(rest)) == b;
      }
      return false;
    });
    inst.construction = "loose_cycle_lb";
    inst.parameters = {{"k", k}, {"chi", chi}, {"n", n}, {"t", t}, {"q", q}, {"N", order}};
    inst.flags.push_back("variant_pencil");
    inst.blue_target = Pattern::graph(near_class_target(k, chi, t, std::max(2 * t - 2, q)), "near_class");
  }
  inst.red_target = Pattern::cycle(k, 1, n);
  return inst;
}

LowerBoundInstance non_transitive_lb(int m, int t) {
  require(m >= 2 && t >= 1, "non_transitive_lb needs m >= 2 and t >= 1");
  const long long order = static_cast<long long>(m - 1) * t;
  check_order(order);
  LowerBoundInstance inst;
  inst.construction = "non_transitive_lb";
  inst.partition = consecutive_blocks(std::vector<int>(m - 1, t));
  inst.coloring = coloring_from_rule(3, static_cast<int>(order), [t](const KSet& e) {
    // Sorted triple: red iff the two lowest vertices share a block.
    return e[0] / t == e[1] / t;
  });
  inst.parameters = {{"m", m}, {"t", t}, {"N", order}};
  inst.red_target = Pattern::path(3, 2, 3 * t / 2 + 2);
  inst.blue_target = parse_pattern("c3h:" + std::to_string(m));
  return inst;
}

LowerBoundInstance transitive_lb(const Tournament& t, int n) {
  const int size = 2 * n / 3 - 2;
  if (size < 1) throw InvalidInput("transitive_lb needs floor(2n/3) - 2 >= 1");
  const int r = t.order();
  require(r >= 1, "transitive_lb needs a nonempty tournament");
  const long long order = static_cast<long long>(size) * r;
  check_order(order);
  LowerBoundInstance inst;
  inst.construction = "transitive_lb";
  inst.partition = consecutive_blocks(std::vector<int>(r, size));
  inst.coloring = coloring_from_rule(3, static_cast<int>(order), [&](const KSet& e) {
    const int a = e[0] / size, b = e[1] / size, c = e[2] / size;
    if (a == b && b == c) return true;
    if (a == b) return t.has_arc(a, c);
    if (b == c) return t.has_arc(b, a);
    return false;
  });
  const int chi = largest_transitive_subtournament(t) + 1;
  inst.parameters = {{"n", n}, {"tournament_order", r}, {"block", size}, {"chi", chi}, {"N", order}};
  inst.red_target = Pattern::path(3, 2, n);
  inst.blue_target = parse_pattern("tth:" + std::to_string(chi) + ":" + std::to_string(r + 1));
  return inst;
}

TauConstruction tau_lower_construction(int k, int alpha) {
  require(k >= 2 && alpha >= 1, "tau_lower_construction needs k >= 2 and alpha >= 1");
  TauConstruction out;
  if (alpha < k) {
    out.graph = Hypergraph(k, alpha - 1, {});
    out.trivial_regime = true;
    return out;
  }
  const int r = (alpha - 1) / (k - 1);
  const int s = (alpha - 1) % (k - 1);
  Hypergraph g(k, 0, {});
  const Hypergraph clique = complete_hypergraph(k, 2 * k - 2);
  for (int i = 0; i < r; ++i) g = g.disjoint_union(clique);
  out.graph = g.with_order(g.order() + s);
  return out;
}

Json instance_to_json(const LowerBoundInstance& instance) {
  Json j;
  j["construction"] = instance.construction;
  Json params = Json::object();
  for (const auto& [key, value] : instance.parameters) params[key] = value;
  j["parameters"] = params;
  j["partition"] = instance.partition;
  if (instance.red_target) j["claimed_red_free"] = instance.red_target->label();
  if (instance.blue_target) {
    j["claimed_blue_free"] = instance.blue_target->label();
    j["blue_target"] = hypergraph_to_json(instance.blue_target->hypergraph());
  }
  j["flags"] = instance.flags;
  j["coloring"] = coloring_to_json(instance.coloring);
  return j;
}

}  // namespace rgood
