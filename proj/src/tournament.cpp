#include "rgood/tournament.hpp"

#include <string>

#include "rgood/error.hpp"

namespace rgood {

Tournament::Tournament(int n) : n_(n), out_(n, 0) {
  require(n >= 0 && n <= 32, "tournaments support at most 32 vertices");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out_[i] |= std::uint32_t{1} << j;
}

Tournament Tournament::transitive(int n) { return Tournament(n); }

Tournament Tournament::cyclic_triangle() { return from_arcs(3, {{0, 1}, {1, 2}, {2, 0}}); }

Tournament Tournament::quadratic_residue(int p) {
  require(p >= 3 && p % 4 == 3 && p <= 31, "quadratic residue tournament needs a prime p = 3 mod 4");
  for (int d = 2; d * d <= p; ++d) require(p % d != 0, "quadratic residue tournament needs a prime");
  std::vector<bool> square(p, false);
  for (int x = 1; x < p; ++x) square[(x * x) % p] = true;
  Tournament t(p);
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      if (square[(j - i) % p])
        t.orient(i, j);
      else
        t.orient(j, i);
    }
  return t;
}

Tournament Tournament::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
  Tournament t(n);
  std::vector<std::uint32_t> seen(n, 0);
  for (auto [a, b] : arcs) {
    require(a >= 0 && b >= 0 && a < n && b < n && a != b, "arc endpoint out of range");
    require(!((seen[a] >> b) & 1U), "pair oriented twice");
    seen[a] |= std::uint32_t{1} << b;
    seen[b] |= std::uint32_t{1} << a;
    t.orient(a, b);
  }
  for (int i = 0; i < n; ++i)
    require(seen[i] == (((n == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1)) & ~(std::uint32_t{1} << i)),
            "tournament arcs must orient every pair exactly once");
  return t;
}

std::uint32_t Tournament::in_mask(int v) const {
  std::uint32_t in = 0;
  for (int u = 0; u < n_; ++u)
    if (u != v && has_arc(u, v)) in |= std::uint32_t{1} << u;
  return in;
}

void Tournament::orient(int from, int to) {
  out_[from] |= std::uint32_t{1} << to;
  out_[to] &= ~(std::uint32_t{1} << from);
}

std::vector<std::pair<int, int>> Tournament::arcs() const {
  std::vector<std::pair<int, int>> result;
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i) result.emplace_back(has_arc(i, j) ? std::pair{i, j} : std::pair{j, i});
  return result;
}

Tournament Tournament::extended(std::uint32_t out) const {
  require(n_ < 32, "tournament too large to extend");
  Tournament t = *this;
  t.n_ = n_ + 1;
  t.out_.push_back(0);
  for (int u = 0; u < n_; ++u) {
    if ((out >> u) & 1U)
      t.orient(n_, u);
    else
      t.orient(u, n_);
  }
  return t;
}

Tournament Tournament::relabelled(const std::vector<int>& perm) const {
  Tournament t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && has_arc(i, j)) t.orient(perm[i], perm[j]);
  return t;
}

Tournament Tournament::induced(const std::vector<int>& vertices) const {
  const int m = static_cast<int>(vertices.size());
  Tournament t(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && has_arc(vertices[i], vertices[j])) t.orient(i, j);
  return t;
}

std::uint64_t Tournament::arc_bits() const {
  require(n_ <= 11, "arc bitstring limited to 11 vertices");
  std::uint64_t bits = 0;
  int pos = 0;
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i, ++pos)
      if (has_arc(i, j)) bits |= std::uint64_t{1} << pos;
  return bits;
}

}  // namespace rgood
