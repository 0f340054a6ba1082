#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace rgood {

using Vertex = int;
using KSet = std::vector<Vertex>;
using VertexMask = std::uint64_t;

// Binomial coefficient C(n, r) for 0 <= n <= 64; 0 when r is out of range.
std::uint64_t binomial(int n, int r);

// Colex rank of a sorted k-subset: sum over i of C(a_i, i), i from 1.
std::uint64_t colex_rank(std::span<const Vertex> sorted_set);
std::uint64_t colex_rank_mask(VertexMask mask);

// Inverse of colex_rank for k-subsets of [n].
KSet colex_unrank(std::uint64_t rank, int k, int n);

// Validates that s is strictly increasing with entries in [0, n).
void check_kset(std::span<const Vertex> s, int k, int n);

VertexMask to_mask(std::span<const Vertex> vertices);
KSet from_mask(VertexMask mask);

inline int popcount(VertexMask mask) { return __builtin_popcountll(mask); }

// Calls f(subset) for each k-subset of [n] in colex order.
template <typename F>
void for_each_kset(int n, int k, F&& f) {
  if (k > n || k < 0) return;
  KSet s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  while (true) {
    f(static_cast<const KSet&>(s));
    int i = 0;
    while (i < k && (i + 1 == k ? s[i] + 1 >= n : s[i] + 1 == s[i + 1])) ++i;
    if (i == k) return;
    ++s[i];
    for (int j = 0; j < i; ++j) s[j] = j;
  }
}

// Calls f(subset) for each k-subset of the given sorted vertex list, lexicographic
// in positions.
template <typename F>
void for_each_subset_of(std::span<const Vertex> pool, int k, F&& f) {
  const int n = static_cast<int>(pool.size());
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  KSet s(k);
  while (true) {
    for (int i = 0; i < k; ++i) s[i] = pool[idx[i]];
    f(static_cast<const KSet&>(s));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace rgood
