#include "rgood/profile.hpp"

#include <algorithm>
#include <string>

#include "rgood/error.hpp"

namespace rgood {

std::vector<std::vector<Vertex>> RamseyProfile::classes() const {
  std::vector<std::vector<Vertex>> out(chi);
  for (std::size_t v = 0; v < witness.size(); ++v) out[witness[v]].push_back(static_cast<Vertex>(v));
  return out;
}

bool is_proper_coloring(const Hypergraph& h, const std::vector<int>& classes) {
  if (static_cast<int>(classes.size()) != h.order()) return false;
  for (const auto& e : h.edges()) {
    bool mono = true;
    for (Vertex v : e) mono = mono && classes[v] == classes[e[0]];
    if (mono) return false;
  }
  return true;
}

namespace {

// Exhausts proper colourings with at most `colors` classes in first-use order,
// keeping the lexicographically first one of least minimum class size.
class ProperColoringSearch {
 public:
  ProperColoringSearch(const Hypergraph& h, int colors) : n_(h.order()), colors_(colors) {
    closing_.resize(n_);
    for (VertexMask e : h.edge_masks()) closing_[63 - __builtin_clzll(e)].push_back(e);
    assignment_.assign(n_, -1);
    class_mask_.assign(colors_, 0);
    class_size_.assign(colors_, 0);
  }

  bool run() {
    descend(0, 0);
    return best_sigma_ > 0;
  }
  int sigma() const { return best_sigma_; }
  const std::vector<int>& witness() const { return best_; }

 private:
  void descend(int v, int used) {
    if (v == n_) {
      if (used != colors_) return;
      const int sigma = *std::min_element(class_size_.begin(), class_size_.end());
      if (best_sigma_ == 0 || sigma < best_sigma_) {
        best_sigma_ = sigma;
        best_ = assignment_;
      }
      return;
    }
    // Every remaining vertex can open at most one new class.
    if (colors_ - used > n_ - v) return;
    const int limit = std::min(used + 1, colors_);
    for (int c = 0; c < limit; ++c) {
      const VertexMask with_v = class_mask_[c] | (VertexMask{1} << v);
      bool proper = true;
      for (VertexMask e : closing_[v])
        if ((e & with_v) == e) {
          proper = false;
          break;
        }
      if (!proper) continue;
      assignment_[v] = c;
      class_mask_[c] = with_v;
      ++class_size_[c];
      descend(v + 1, std::max(used, c + 1));
      --class_size_[c];
      class_mask_[c] &= ~(VertexMask{1} << v);
      assignment_[v] = -1;
      if (best_sigma_ == 1) return;
    }
  }

  int n_;
  int colors_;
  std::vector<std::vector<VertexMask>> closing_;
  std::vector<int> assignment_;
  std::vector<VertexMask> class_mask_;
  std::vector<int> class_size_;
  int best_sigma_ = 0;
  std::vector<int> best_;
};

}  // namespace

RamseyProfile ramsey_profile(const Hypergraph& h, int guard) {
  require(h.order() >= 1, "ramsey_profile: H must have at least one vertex");
  require(h.uniformity() >= 2, "ramsey_profile: uniformity must be at least 2");
  if (h.order() > guard)
    throw GuardExceeded("ramsey_profile: v(H) = " + std::to_string(h.order()) + " exceeds guard " +
                        std::to_string(guard));
  RamseyProfile profile;
  if (h.size() == 0) {
    profile.chi = 1;
    profile.sigma = h.order();
    profile.witness.assign(h.order(), 0);
    profile.edgeless = true;
    return profile;
  }
  for (int colors = 1; colors <= h.order(); ++colors) {
    ProperColoringSearch search(h, colors);
    if (search.run()) {
      profile.chi = colors;
      profile.sigma = search.sigma();
      profile.witness = search.witness();
      return profile;
    }
  }
  throw InternalError("ramsey_profile: no proper colouring found");
}

BurrBound burr_bound(int vg, int chi, int sigma) {
  require(vg >= 1 && chi >= 1 && sigma >= 1, "burr_bound: arguments must be positive");
  BurrBound b;
  b.value = static_cast<long long>(vg - 1) * (chi - 1) + sigma;
  b.hypothesis_holds = vg >= sigma;
  return b;
}

BurrBound burr_bound(int vg, const RamseyProfile& profile) {
  return burr_bound(vg, profile.chi, profile.sigma);
}

}  // namespace rgood
