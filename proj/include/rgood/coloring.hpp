#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rgood/colex.hpp"
#include "rgood/hypergraph.hpp"

namespace rgood {

enum class Color : std::uint8_t { kBlue = 0, kRed = 1 };

inline Color opposite(Color c) { return c == Color::kRed ? Color::kBlue : Color::kRed; }
const char* color_name(Color c);
Color parse_color(const std::string& name);

// Red/blue assignment to every k-subset of [n], bit r of the bitmap being the
// colour of the subset of colex rank r (1 = red).
class TwoColoring {
 public:
  TwoColoring() = default;
  TwoColoring(int k, int n, Color fill = Color::kBlue);

  static TwoColoring from_bytes(int k, int n, std::span<const std::uint8_t> lsb_first);

  int uniformity() const { return k_; }
  int order() const { return n_; }
  std::uint64_t num_subsets() const { return count_; }

  Color color_at(std::uint64_t rank) const {
    return ((words_[rank >> 6] >> (rank & 63)) & 1U) ? Color::kRed : Color::kBlue;
  }
  bool is_red_at(std::uint64_t rank) const { return (words_[rank >> 6] >> (rank & 63)) & 1U; }
  Color color(std::span<const Vertex> sorted_set) const { return color_at(colex_rank(sorted_set)); }
  Color color_of_mask(VertexMask mask) const { return color_at(colex_rank_mask(mask)); }
  // Colour of an arbitrary (unsorted) k-set.
  Color color_unsorted(KSet set) const;

  void set_at(std::uint64_t rank, Color c);
  void set(std::span<const Vertex> sorted_set, Color c) { set_at(colex_rank(sorted_set), c); }

  std::uint64_t count_red() const;
  std::vector<std::uint8_t> to_bytes() const;

  // Colouring of the sub-host on `vertices`, relabelled 0..|vertices|-1 in the given order.
  TwoColoring induced(std::span<const Vertex> vertices) const;
  // New colouring c' with c'(perm[S]) = c(S).
  TwoColoring permuted(std::span<const Vertex> perm) const;
  TwoColoring inverted() const;
  Hypergraph color_class(Color c) const;

  bool operator==(const TwoColoring& other) const = default;

 private:
  int k_ = 2;
  int n_ = 0;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace rgood
