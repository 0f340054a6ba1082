#pragma once

#include <cstddef>
#include <vector>

#include "rgood/colex.hpp"

namespace rgood {

// k-uniform hypergraph on vertices 0..n-1; edges kept sorted, deduplicated-free
// and in colex order.
class Hypergraph {
 public:
  Hypergraph() = default;
  // Throws InvalidInput on malformed or duplicate edges. Edges may be given in
  // any order and with unsorted vertices.
  Hypergraph(int k, int n, std::vector<KSet> edges);

  int uniformity() const { return k_; }
  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<KSet>& edges() const { return edges_; }
  const KSet& edge(std::size_t i) const { return edges_[i]; }

  // Requires order() <= 64.
  std::vector<VertexMask> edge_masks() const;
  std::vector<int> degrees() const;
  bool has_edge(const KSet& sorted_edge) const;

  // Disjoint union with `other` placed on vertices order()..order()+other.order()-1.
  Hypergraph disjoint_union(const Hypergraph& other) const;
  // Adds isolated vertices.
  Hypergraph with_order(int n) const;

  bool operator==(const Hypergraph& other) const = default;

 private:
  int k_ = 2;
  int n_ = 0;
  std::vector<KSet> edges_;
};

// Complete k-graph on n vertices.
Hypergraph complete_hypergraph(int k, int n);
// A single edge {0..k-1}.
Hypergraph single_edge(int k);

}  // namespace rgood
