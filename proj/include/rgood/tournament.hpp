#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace rgood {

// Orientation of K_n; out_[i] has bit j set iff the arc is i -> j. n <= 32.
class Tournament {
 public:
  Tournament() = default;
  // Every pair oriented from smaller to larger index.
  explicit Tournament(int n);
  static Tournament transitive(int n);
  static Tournament cyclic_triangle();
  // Paley tournament on a prime p = 3 mod 4: i -> j iff j - i is a nonzero square.
  static Tournament quadratic_residue(int p);
  static Tournament from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

  int order() const { return n_; }
  bool has_arc(int from, int to) const { return (out_[from] >> to) & 1U; }
  std::uint32_t out_mask(int v) const { return out_[v]; }
  std::uint32_t in_mask(int v) const;
  void orient(int from, int to);

  std::vector<std::pair<int, int>> arcs() const;
  // Adds one vertex; `out` lists the existing vertices it points to.
  Tournament extended(std::uint32_t out) const;
  Tournament relabelled(const std::vector<int>& perm) const;
  Tournament induced(const std::vector<int>& vertices) const;

  // Arc bits over pairs i<j in colex pair order (bit set iff i -> j).
  std::uint64_t arc_bits() const;

  bool operator==(const Tournament& other) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint32_t> out_;
};

}  // namespace rgood
