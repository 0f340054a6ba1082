#include "rgood/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "rgood/error.hpp"

namespace rgood {

namespace {

bool colex_less(const KSet& a, const KSet& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace

Hypergraph::Hypergraph(int k, int n, std::vector<KSet> edges) : k_(k), n_(n) {
  require(k >= 1, "uniformity must be positive");
  require(n >= 0, "vertex count must be nonnegative");
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw InvalidInput("edge with a repeated vertex");
    check_kset(e, k, n);
  }
  std::sort(edges.begin(), edges.end(), colex_less);
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InvalidInput("duplicate edge");
  edges_ = std::move(edges);
}

std::vector<VertexMask> Hypergraph::edge_masks() const {
  require(n_ <= 64, "hypergraph too large for mask representation");
  std::vector<VertexMask> masks;
  masks.reserve(edges_.size());
  for (const auto& e : edges_) masks.push_back(to_mask(e));
  return masks;
}

std::vector<int> Hypergraph::degrees() const {
  std::vector<int> d(n_, 0);
  for (const auto& e : edges_)
    for (Vertex v : e) ++d[v];
  return d;
}

bool Hypergraph::has_edge(const KSet& sorted_edge) const {
  return std::binary_search(edges_.begin(), edges_.end(), sorted_edge, colex_less);
}

Hypergraph Hypergraph::disjoint_union(const Hypergraph& other) const {
  require(other.k_ == k_, "disjoint union of different uniformities");
  std::vector<KSet> edges = edges_;
  for (KSet e : other.edges_) {
    for (auto& v : e) v += n_;
    edges.push_back(std::move(e));
  }
  return Hypergraph(k_, n_ + other.n_, std::move(edges));
}

Hypergraph Hypergraph::with_order(int n) const {
  require(n >= n_, "cannot shrink a hypergraph by adding vertices");
  return Hypergraph(k_, n, edges_);
}

Hypergraph complete_hypergraph(int k, int n) {
  std::vector<KSet> edges;
  for_each_kset(n, k, [&](const KSet& s) { edges.push_back(s); });
  return Hypergraph(k, n, std::move(edges));
}

Hypergraph single_edge(int k) { return complete_hypergraph(k, k); }

}  // namespace rgood
