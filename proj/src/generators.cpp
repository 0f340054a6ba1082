#include "rgood/generators.hpp"

#include <algorithm>
#include <string>

#include "rgood/error.hpp"

namespace rgood {

Hypergraph ell_path(int k, int ell, int n) {
  require(k >= 2, "ell_path: k must be at least 2");
  require(ell >= 1 && ell <= k - 1, "ell_path: need 1 <= ell <= k-1");
  require(n >= k, "ell_path: need n >= k");
  const int step = k - ell;
  require((n - ell) % step == 0,
          "ell_path: n = " + std::to_string(n) + " is not congruent to ell mod k-ell");
  const int q = (n - ell) / step;
  std::vector<KSet> edges;
  for (int i = 0; i < q; ++i) {
    KSet e(k);
    for (int j = 0; j < k; ++j) e[j] = i * step + j;
    edges.push_back(std::move(e));
  }
  return Hypergraph(k, n, std::move(edges));
}

Hypergraph ell_cycle(int k, int ell, int n) {
  require(k >= 2, "ell_cycle: k must be at least 2");
  require(ell >= 1 && ell <= k - 1, "ell_cycle: need 1 <= ell <= k-1");
  const int step = k - ell;
  require(n % step == 0, "ell_cycle: n = " + std::to_string(n) + " is not divisible by k-ell");
  require(n >= k, "ell_cycle: wrap produces a repeated vertex (n < k)");
  const int q = n / step;
  std::vector<KSet> edges;
  for (int i = 0; i < q; ++i) {
    KSet e(k);
    for (int j = 0; j < k; ++j) e[j] = (i * step + j) % n;
    std::sort(e.begin(), e.end());
    require(std::adjacent_find(e.begin(), e.end()) == e.end(), "ell_cycle: wrap produces a repeated vertex");
    edges.push_back(std::move(e));
  }
  std::vector<KSet> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "ell_cycle: degenerate wrap produces a repeated edge");
  return Hypergraph(k, n, std::move(edges));
}

PartitionedHypergraph tournament_hypergraph(const Tournament& t, int m) {
  require(m >= 1, "tournament_hypergraph: m must be positive");
  const int chi = t.order();
  PartitionedHypergraph out;
  out.classes.resize(chi);
  for (int i = 0; i < chi; ++i)
    for (int x = 0; x < m; ++x) out.classes[i].push_back(i * m + x);
  std::vector<KSet> edges;
  for (auto [i, j] : t.arcs())
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y)
        for (int z = 0; z < m; ++z) edges.push_back({i * m + x, i * m + y, j * m + z});
  out.graph = Hypergraph(3, chi * m, std::move(edges));
  return out;
}

Hypergraph fano() {
  std::vector<KSet> lines;
  for (int i = 0; i < 7; ++i) lines.push_back({i, (i + 1) % 7, (i + 3) % 7});
  Hypergraph h(3, 7, std::move(lines));
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b) {
      int covering = 0;
      for (const auto& e : h.edges())
        covering += std::count(e.begin(), e.end(), a) + std::count(e.begin(), e.end(), b) == 2;
      if (covering != 1) throw InternalError("fano: pair coverage property fails");
    }
  return h;
}

PartitionedHypergraph near_class_hypergraph(int k, const std::vector<int>& class_sizes) {
  require(k >= 2, "near_class_hypergraph: k must be at least 2");
  PartitionedHypergraph out;
  std::vector<int> owner;
  for (std::size_t i = 0; i < class_sizes.size(); ++i) {
    require(class_sizes[i] >= 0, "negative class size");
    out.classes.emplace_back();
    for (int x = 0; x < class_sizes[i]; ++x) {
      out.classes.back().push_back(static_cast<int>(owner.size()));
      owner.push_back(static_cast<int>(i));
    }
  }
  const int n = static_cast<int>(owner.size());
  std::vector<KSet> edges;
  std::vector<int> count(class_sizes.size());
  for_each_kset(n, k, [&](const KSet& e) {
    std::fill(count.begin(), count.end(), 0);
    for (Vertex v : e) ++count[owner[v]];
    if (std::find(count.begin(), count.end(), k - 1) != count.end()) edges.push_back(e);
  });
  out.graph = Hypergraph(k, n, std::move(edges));
  return out;
}

}  // namespace rgood
