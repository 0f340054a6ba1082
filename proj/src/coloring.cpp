#include "rgood/coloring.hpp"

#include <algorithm>
#include <string>

#include "rgood/error.hpp"

namespace rgood {

const char* color_name(Color c) { return c == Color::kRed ? "red" : "blue"; }

Color parse_color(const std::string& name) {
  if (name == "red") return Color::kRed;
  if (name == "blue") return Color::kBlue;
  throw InvalidInput("unknown colour '" + name + "'");
}

TwoColoring::TwoColoring(int k, int n, Color fill) : k_(k), n_(n) {
  require(k >= 1 && n >= 0, "invalid colouring dimensions");
  require(n <= 64, "colourings support at most 64 vertices");
  count_ = binomial(n, k);
  words_.assign((count_ + 63) / 64, fill == Color::kRed ? ~std::uint64_t{0} : 0);
  if (fill == Color::kRed && (count_ & 63) != 0) words_.back() &= (std::uint64_t{1} << (count_ & 63)) - 1;
}

TwoColoring TwoColoring::from_bytes(int k, int n, std::span<const std::uint8_t> lsb_first) {
  TwoColoring c(k, n);
  const std::uint64_t bytes_needed = (c.count_ + 7) / 8;
  if (lsb_first.size() != bytes_needed)
    throw InvalidInput("bitmap has " + std::to_string(lsb_first.size()) + " bytes, expected " +
                       std::to_string(bytes_needed));
  for (std::uint64_t r = 0; r < c.count_; ++r)
    if ((lsb_first[r >> 3] >> (r & 7)) & 1U) c.set_at(r, Color::kRed);
  for (std::uint64_t r = c.count_; r < bytes_needed * 8; ++r)
    if ((lsb_first[r >> 3] >> (r & 7)) & 1U) throw InvalidInput("bitmap padding bits must be zero");
  return c;
}

Color TwoColoring::color_unsorted(KSet set) const {
  std::sort(set.begin(), set.end());
  return color(set);
}

void TwoColoring::set_at(std::uint64_t rank, Color c) {
  const std::uint64_t bit = std::uint64_t{1} << (rank & 63);
  if (c == Color::kRed)
    words_[rank >> 6] |= bit;
  else
    words_[rank >> 6] &= ~bit;
}

std::uint64_t TwoColoring::count_red() const {
  std::uint64_t total = 0;
  for (auto w : words_) total += __builtin_popcountll(w);
  return total;
}

std::vector<std::uint8_t> TwoColoring::to_bytes() const {
  std::vector<std::uint8_t> bytes((count_ + 7) / 8, 0);
  for (std::uint64_t r = 0; r < count_; ++r)
    if (is_red_at(r)) bytes[r >> 3] |= static_cast<std::uint8_t>(1U << (r & 7));
  return bytes;
}

TwoColoring TwoColoring::induced(std::span<const Vertex> vertices) const {
  const int m = static_cast<int>(vertices.size());
  TwoColoring out(k_, m);
  KSet image(k_);
  for_each_kset(m, k_, [&](const KSet& s) {
    for (int i = 0; i < k_; ++i) image[i] = vertices[s[i]];
    if (color_unsorted(image) == Color::kRed) out.set(s, Color::kRed);
  });
  return out;
}

TwoColoring TwoColoring::permuted(std::span<const Vertex> perm) const {
  require(static_cast<int>(perm.size()) == n_, "permutation length mismatch");
  TwoColoring out(k_, n_);
  KSet image(k_);
  for_each_kset(n_, k_, [&](const KSet& s) {
    if (color(s) != Color::kRed) return;
    for (int i = 0; i < k_; ++i) image[i] = perm[s[i]];
    std::sort(image.begin(), image.end());
    out.set(image, Color::kRed);
  });
  return out;
}

TwoColoring TwoColoring::inverted() const {
  TwoColoring out = *this;
  for (auto& w : out.words_) w = ~w;
  if (!out.words_.empty() && (count_ & 63) != 0) out.words_.back() &= (std::uint64_t{1} << (count_ & 63)) - 1;
  return out;
}

Hypergraph TwoColoring::color_class(Color c) const {
  std::vector<KSet> edges;
  for_each_kset(n_, k_, [&](const KSet& s) {
    if (color(s) == c) edges.push_back(s);
  });
  return Hypergraph(k_, n_, std::move(edges));
}

}  // namespace rgood
