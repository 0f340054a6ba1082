#include "rgood/colex.hpp"

#include <array>
#include <string>

#include "rgood/error.hpp"

namespace rgood {

namespace {

using BinomialTable = std::array<std::array<std::uint64_t, 65>, 65>;

const BinomialTable& binomial_table() {
  static const BinomialTable table = [] {
    BinomialTable t{};
    for (int n = 0; n <= 64; ++n) {
      t[n][0] = 1;
      for (int r = 1; r <= n; ++r) t[n][r] = t[n - 1][r - 1] + (r <= n - 1 ? t[n - 1][r] : 0);
    }
    return t;
  }();
  return table;
}

}  // namespace

std::uint64_t binomial(int n, int r) {
  if (n < 0 || r < 0 || r > n) return 0;
  if (n > 64) throw InvalidInput("binomial: n = " + std::to_string(n) + " exceeds 64");
  return binomial_table()[n][r];
}

std::uint64_t colex_rank(std::span<const Vertex> sorted_set) {
  const auto& t = binomial_table();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < sorted_set.size(); ++i) {
    const int a = sorted_set[i];
    if (a >= static_cast<int>(i + 1)) rank += t[a][i + 1];
  }
  return rank;
}

std::uint64_t colex_rank_mask(VertexMask mask) {
  const auto& t = binomial_table();
  std::uint64_t rank = 0;
  int i = 1;
  while (mask) {
    const int a = __builtin_ctzll(mask);
    if (a >= i) rank += t[a][i];
    mask &= mask - 1;
    ++i;
  }
  return rank;
}

KSet colex_unrank(std::uint64_t rank, int k, int n) {
  if (k < 0 || n < 0 || n > 64 || rank >= binomial(n, k))
    throw InvalidInput("colex_unrank: rank " + std::to_string(rank) + " out of range for C(" +
                       std::to_string(n) + "," + std::to_string(k) + ")");
  KSet s(k);
  int upper = n - 1;
  for (int i = k; i >= 1; --i) {
    int a = upper;
    while (binomial(a, i) > rank) --a;
    s[i - 1] = a;
    rank -= binomial(a, i);
    upper = a - 1;
  }
  return s;
}

void check_kset(std::span<const Vertex> s, int k, int n) {
  if (static_cast<int>(s.size()) != k)
    throw InvalidInput("subset has " + std::to_string(s.size()) + " vertices, expected " +
                       std::to_string(k));
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= n)
      throw InvalidInput("vertex " + std::to_string(s[i]) + " outside [0," + std::to_string(n) + ")");
    if (i > 0 && s[i - 1] >= s[i]) throw InvalidInput("subset is not strictly increasing");
  }
}

VertexMask to_mask(std::span<const Vertex> vertices) {
  VertexMask m = 0;
  for (Vertex v : vertices) {
    if (v < 0 || v >= 64) throw InvalidInput("vertex " + std::to_string(v) + " does not fit a mask");
    m |= VertexMask{1} << v;
  }
  return m;
}

KSet from_mask(VertexMask mask) {
  KSet s;
  while (mask) {
    s.push_back(__builtin_ctzll(mask));
    mask &= mask - 1;
  }
  return s;
}

}  // namespace rgood
