#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rgood/constructions.hpp"
#include "rgood/error.hpp"
#include "rgood/generators.hpp"
#include "rgood/profile.hpp"
#include "rgood/search.hpp"

using namespace rgood;

namespace {

// Blue copy check that skips targets larger than the host.
bool blue_copy(const TwoColoring& c, const Hypergraph& h) {
  return h.order() <= c.order() && oracle::has_mono_copy(c, h, Color::kBlue);
}

}  // namespace

TEST(Constructions, BurrColoringIsFreeAtBoundMinusOne) {
  for (auto [red, blue] : {std::pair{"path:3:2:4", "clique:3:4"}, std::pair{"path:3:1:5", "clique:3:4"},
                           std::pair{"path:3:2:5", "tth:2:2"}}) {
    const auto g = parse_pattern(red);
    const auto h = parse_pattern(blue).hypergraph();
    const auto p = oracle::profile(h);
    const auto inst = burr_coloring(3, p.chi, p.sigma, g.order());
    EXPECT_EQ(inst.coloring.order(), (g.order() - 1) * (p.chi - 1) + p.sigma - 1);
    EXPECT_FALSE(oracle::has_mono_copy(inst.coloring, g.hypergraph(), Color::kRed)) << red;
    EXPECT_FALSE(blue_copy(inst.coloring, h)) << blue;
  }
}

TEST(Constructions, EllPathLowerBound) {
  const auto inst = ell_path_lb(3, 2, 6, 2);
  EXPECT_FALSE(oracle::has_mono_path(inst.coloring, 2, 6, Color::kRed));
  EXPECT_FALSE(blue_copy(inst.coloring, complete_hypergraph(3, 4)));
  EXPECT_EQ(inst.red_target->label(), "path:3:2:6");
  EXPECT_THROW(ell_path_lb(3, 1, 5, 2), InvalidInput);
}

TEST(Constructions, NearClassTargetShape) {
  const auto h = near_class_target(3, 2, 2, 2);
  const auto p = ramsey_profile(h);
  EXPECT_EQ(p.chi, 2);
  for (const auto& e : h.edges()) {
    EXPECT_EQ(e.size(), 3U);
  }
  const auto nc = near_class_hypergraph(3, {2, 3});
  for (const auto& e : nc.graph.edges()) {
    int in_first = 0;
    for (Vertex v : e) in_first += v < 2;
    EXPECT_TRUE(in_first == 2 || in_first == 1);
  }
  EXPECT_EQ(nc.graph.size(), 1U * 3 + 3U * 2);
}

TEST(Constructions, LoosePathLowerBound) {
  const auto j = tau_lower_construction(2, 2).graph;
  const auto inst = loose_path_lb(3, 3, 7, 2, j);
  EXPECT_EQ(inst.coloring.order(), 10);
  EXPECT_FALSE(oracle::has_mono_path(inst.coloring, 1, 7, Color::kRed));
  EXPECT_FALSE(blue_copy(inst.coloring, inst.blue_target->hypergraph()));
  EXPECT_THROW(loose_path_lb(3, 2, 5, 2, ell_path(2, 1, 3)), InvalidInput);
}

TEST(Constructions, LooseCycleLowerBound) {
  const auto pencil = loose_cycle_lb(3, 2, 6, 2, LooseCycleVariant::kPencil, 2);
  EXPECT_TRUE(pencil.has_flag("variant_pencil"));
  EXPECT_FALSE(oracle::has_mono_cycle(pencil.coloring, 1, 6, Color::kRed));
  EXPECT_FALSE(blue_copy(pencil.coloring, pencil.blue_target->hypergraph()));
  const auto tau = loose_cycle_lb(3, 2, 6, 2, LooseCycleVariant::kTau, 2, tau_lower_construction(2, 2).graph);
  EXPECT_TRUE(tau.has_flag("reconstructed"));
  EXPECT_FALSE(oracle::has_mono_cycle(tau.coloring, 1, 6, Color::kRed));
  EXPECT_FALSE(blue_copy(tau.coloring, tau.blue_target->hypergraph()));
}

TEST(Constructions, NonTransitiveLowerBound) {
  const auto inst = non_transitive_lb(3, 4);
  EXPECT_EQ(inst.coloring.order(), 8);
  EXPECT_LE(oracle::longest_mono_path(inst.coloring, 2, Color::kRed), 4 + 2 + 1);
  const auto blue = inst.blue_target->hypergraph();
  EXPECT_FALSE(blue_copy(inst.coloring, blue));
}

TEST(Constructions, TransitiveLowerBound) {
  const auto inst = transitive_lb(Tournament::cyclic_triangle(), 6);
  EXPECT_EQ(inst.partition.size(), 3U);
  EXPECT_FALSE(oracle::has_mono_path(inst.coloring, 2, 6, Color::kRed));
  EXPECT_EQ(inst.blue_target->label(), "tth:3:4");
}

TEST(Constructions, TauLowerConstruction) {
  for (int k = 2; k <= 4; ++k)
    for (int alpha = 1; alpha <= 6; ++alpha) {
      const auto tc = tau_lower_construction(k, alpha);
      EXPECT_EQ(tc.trivial_regime, alpha < k);
      if (tc.graph.order() > 12) continue;
      EXPECT_LT(oracle::independence_number(tc.graph), alpha);
      EXPECT_FALSE(oracle::has_two_edge_loose_path(tc.graph));
    }
  const auto t34 = tau_lower_construction(3, 4);
  EXPECT_EQ(t34.graph.order(), 5);
  EXPECT_EQ(t34.graph.size(), 4U);
}

TEST(Constructions, InstanceJson) {
  const auto j = instance_to_json(ell_path_lb(3, 2, 6, 2));
  EXPECT_EQ(j.at("construction"), "ell_path_lb");
  EXPECT_TRUE(j.contains("coloring"));
  EXPECT_EQ(j.at("claimed_red_free"), "path:3:2:6");
  EXPECT_TRUE(j.contains("blue_target"));
  EXPECT_EQ(j.at("parameters").at("k"), 3);
}
