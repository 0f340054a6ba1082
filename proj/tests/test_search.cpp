#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rgood/certificate.hpp"
#include "rgood/error.hpp"
#include "rgood/generators.hpp"
#include "rgood/search.hpp"

using namespace rgood;

TEST(Search, LongestPathMatchesBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 5 + trial % 3;
    const int ell = 1 + trial % 2;
    const double p = 0.2 + 0.1 * (trial % 7);
    const auto c = oracle::random_coloring(3, n, p, rng);
    for (Color col : {Color::kRed, Color::kBlue}) {
      const auto r = longest_mono_ell_path(c, ell, col);
      EXPECT_EQ(r.vertices, oracle::longest_mono_path(c, ell, col)) << "trial " << trial;
      if (r.edges > 0) {
        EXPECT_TRUE(validate_mono_path(c, ell, r.certificate.sequence, col).ok);
        EXPECT_TRUE(check_certificate(r.certificate, {c, {}, {}}).ok);
      }
    }
  }
}

TEST(Search, CycleMatchesBruteForce) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 6 + trial % 2;
    const auto c = oracle::random_coloring(3, n, 0.4 + 0.1 * (trial % 5), rng);
    for (auto [ell, p] : {std::pair{1, 4}, std::pair{1, 6}, std::pair{2, 5}, std::pair{2, 6}}) {
      const auto r = find_mono_ell_cycle(c, ell, p, Color::kRed);
      EXPECT_EQ(r.witness.has_value(), oracle::has_mono_cycle(c, ell, p, Color::kRed));
      if (r.witness) EXPECT_TRUE(validate_mono_cycle(c, ell, r.witness->sequence, Color::kRed).ok);
    }
  }
}

TEST(Search, EmbeddingMatchesBruteForce) {
  std::mt19937_64 rng(13);
  const std::vector<Hypergraph> patterns = {complete_hypergraph(3, 4), complete_hypergraph(3, 5),
                                            tournament_hypergraph(Tournament::transitive(2), 2).graph,
                                            ell_path(3, 1, 5), single_edge(3)};
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 5 + trial % 3;
    const auto c = oracle::random_coloring(3, n, 0.3 + 0.1 * (trial % 6), rng);
    for (const auto& h : patterns) {
      if (h.order() > 6) continue;
      for (Color col : {Color::kRed, Color::kBlue}) {
        const auto r = find_mono_copy(c, h, col);
        EXPECT_EQ(r.witness.has_value(), oracle::has_mono_copy(c, h, col));
        if (r.witness) EXPECT_TRUE(validate_embedding(c, h, r.witness->mapping, col).ok);
      }
    }
  }
}

TEST(Search, DomainsRestrictImages) {
  const TwoColoring c(3, 6, Color::kRed);
  std::vector<VertexMask> domains(3, VertexMask{0b111000});
  const auto r = find_mono_copy(c, single_edge(3), Color::kRed, {}, domains);
  ASSERT_TRUE(r.witness);
  for (Vertex v : r.witness->mapping) EXPECT_GE(v, 3);
}

TEST(Search, IndependenceMatchesBruteForce) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + trial % 6;
    const auto c = oracle::random_coloring(3, n, 0.15 * (1 + trial % 6), rng);
    const auto h = c.color_class(Color::kRed);
    const auto r = independence_number(h);
    EXPECT_EQ(r.alpha, oracle::independence_number(h));
    EXPECT_TRUE(validate_independent_set(h, r.certificate.sequence).ok);
    EXPECT_EQ(static_cast<int>(r.certificate.sequence.size()), r.alpha);
    EXPECT_EQ(has_two_edge_loose_path(h).has_value(), oracle::has_two_edge_loose_path(h));
  }
}

TEST(Search, TransitiveSubtournamentMatchesBruteForce) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 6;
    const auto t = oracle::tournament_from_code(n, rng());
    for (int chi = 2; chi <= 4; ++chi) {
      const auto order = find_transitive_subtournament(t, chi);
      EXPECT_EQ(order.has_value(), oracle::has_transitive(t, chi));
      if (order) EXPECT_TRUE(validate_transitive(t, *order).ok);
    }
    int largest = 1;
    while (oracle::has_transitive(t, largest + 1)) ++largest;
    EXPECT_EQ(largest_transitive_subtournament(t), largest);
  }
}

TEST(Search, VerifyFreeAgreesWithSearches) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 30; ++trial) {
    const auto c = oracle::random_coloring(3, 6, 0.5, rng);
    const auto red = parse_pattern("path:3:2:5");
    const auto blue = parse_pattern("clique:3:4");
    const auto r = verify_free(c, red, blue);
    const bool expected = !oracle::has_mono_path(c, 2, 5, Color::kRed) &&
                          !oracle::has_mono_copy(c, complete_hypergraph(3, 4), Color::kBlue);
    EXPECT_EQ(r.free, expected);
    EXPECT_TRUE(check_certificate(r.certificate, {c, {}, {}}).ok);
  }
}

TEST(Search, ValidatorsRejectTampering) {
  const TwoColoring all_red(3, 6, Color::kRed);
  std::vector<Vertex> seq{0, 1, 2, 3, 4};
  EXPECT_TRUE(validate_mono_path(all_red, 2, seq, Color::kRed).ok);
  TwoColoring tampered = all_red;
  tampered.set(KSet{1, 2, 3}, Color::kBlue);
  EXPECT_FALSE(validate_mono_path(tampered, 2, seq, Color::kRed).ok);
  EXPECT_FALSE(validate_mono_path(all_red, 2, {0, 1, 1, 3}, Color::kRed).ok);
  EXPECT_FALSE(validate_mono_path(all_red, 1, {0, 1, 2, 3}, Color::kRed).ok);
  EXPECT_FALSE(validate_embedding(all_red, single_edge(3), {0, 0, 1}, Color::kRed).ok);
  EXPECT_FALSE(validate_transitive(Tournament::cyclic_triangle(), {0, 1, 2}).ok);
}

TEST(Search, GuardsThrowOrDegrade) {
  const TwoColoring big(3, 40, Color::kRed);
  SearchLimits limits;
  limits.max_vertices = 10;
  EXPECT_THROW(longest_mono_ell_path(big, 2, Color::kBlue, limits), GuardExceeded);
  limits.allow_inexact = true;
  limits.node_budget = 1000;
  const auto r = longest_mono_ell_path(big, 2, Color::kRed, limits);
  EXPECT_TRUE(validate_mono_path(big, 2, r.certificate.sequence, Color::kRed).ok);
}
