#pragma once

#include <cstdint>
#include <vector>

#include "rgood/certificate.hpp"
#include "rgood/colex.hpp"
#include "rgood/hypergraph.hpp"

namespace rgood::detail {

// Placement order for a pattern: most constrained vertex first.
struct EmbeddingPlan {
  int order_size = 0;
  std::vector<int> order;
  // closing[p] = pattern edges whose last placed vertex is order[p].
  std::vector<std::vector<KSet>> closing;
  std::vector<int> degree;
};

EmbeddingPlan plan_embedding(const Hypergraph& h);

struct BudgetExhausted {};

// Backtracking injective embedding. EdgeOk(mask) decides whether the host
// k-set `mask` may carry a pattern edge.
template <typename EdgeOk>
class Embedder {
 public:
  Embedder(const EmbeddingPlan& plan, int host_n, EdgeOk edge_ok, std::vector<VertexMask> domains,
           std::uint64_t budget)
      : plan_(plan), host_all_(host_n >= 64 ? ~VertexMask{0} : ((VertexMask{1} << host_n) - 1)),
        edge_ok_(edge_ok), domains_(std::move(domains)), budget_(budget), mapping_(plan.order_size, -1) {}

  // Returns true when an embedding exists; throws BudgetExhausted if the budget ends first.
  bool run() { return place(0, 0); }
  const std::vector<Vertex>& mapping() const { return mapping_; }
  const SearchStats& stats() const { return stats_; }

 private:
  bool place(int pos, VertexMask used) {
    ++stats_.nodes;
    if (budget_ != 0 && stats_.nodes > budget_) throw BudgetExhausted{};
    if (pos == plan_.order_size) return true;
    const int u = plan_.order[pos];
    VertexMask cand = host_all_ & ~used;
    if (!domains_.empty()) cand &= domains_[u];
    while (cand) {
      const int x = __builtin_ctzll(cand);
      cand &= cand - 1;
      mapping_[u] = x;
      bool ok = true;
      for (const KSet& e : plan_.closing[pos]) {
        VertexMask image = 0;
        for (Vertex w : e) image |= VertexMask{1} << mapping_[w];
        if (!edge_ok_(image)) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        ++stats_.prunes;
        continue;
      }
      if (place(pos + 1, used | (VertexMask{1} << x))) return true;
    }
    mapping_[u] = -1;
    return false;
  }

  const EmbeddingPlan& plan_;
  VertexMask host_all_;
  EdgeOk edge_ok_;
  std::vector<VertexMask> domains_;
  std::uint64_t budget_;
  std::vector<Vertex> mapping_;
  SearchStats stats_;
};

}  // namespace rgood::detail
