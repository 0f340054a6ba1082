#pragma once

#include <vector>

#include "rgood/hypergraph.hpp"
#include "rgood/tournament.hpp"

namespace rgood {

// k-uniform ell-path on vertices 0..n-1 in natural order.
Hypergraph ell_path(int k, int ell, int n);
// k-uniform ell-cycle on 0..n-1 with cyclic index arithmetic.
Hypergraph ell_cycle(int k, int ell, int n);

struct PartitionedHypergraph {
  Hypergraph graph;
  std::vector<std::vector<Vertex>> classes;
};

// Classes A_i = {i*m, ..., i*m+m-1}; edges {x,y,z} with x,y in A_i, z in A_j for
// every arc i -> j.
PartitionedHypergraph tournament_hypergraph(const Tournament& t, int m);

// Lines {i, i+1, i+3} mod 7.
Hypergraph fano();

// 3-graph on a + b vertices (classes [0,a) and [a,a+b)) whose edges are the
// triples meeting some class in exactly k-1 = 2 vertices; generalised to any k
// and any list of class sizes.
PartitionedHypergraph near_class_hypergraph(int k, const std::vector<int>& class_sizes);

}  // namespace rgood
