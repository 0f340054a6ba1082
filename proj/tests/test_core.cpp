#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "rgood/colex.hpp"
#include "rgood/coloring.hpp"
#include "rgood/error.hpp"
#include "rgood/generators.hpp"
#include "rgood/hypergraph.hpp"
#include "rgood/json_io.hpp"
#include "rgood/pattern.hpp"
#include "rgood/profile.hpp"
#include "rgood/tournament.hpp"

using namespace rgood;

TEST(Colex, RankEnumeratesSubsetsInOrder) {
  for (int n = 0; n <= 9; ++n)
    for (int k = 0; k <= n; ++k) {
      std::uint64_t expected = 0;
      for_each_kset(n, k, [&](const KSet& s) {
        EXPECT_EQ(colex_rank(s), expected);
        EXPECT_EQ(colex_unrank(expected, k, n), s);
        EXPECT_EQ(colex_rank_mask(to_mask(s)), expected);
        ++expected;
      });
      EXPECT_EQ(expected, binomial(n, k));
    }
}

TEST(Colex, OrderMatchesReversedLexOfReversedSets) {
  // Colex: compare largest elements first.
  std::vector<KSet> sets;
  for_each_kset(7, 3, [&](const KSet& s) { sets.push_back(s); });
  for (std::size_t i = 1; i < sets.size(); ++i) {
    KSet a(sets[i - 1].rbegin(), sets[i - 1].rend());
    KSet b(sets[i].rbegin(), sets[i].rend());
    EXPECT_LT(a, b);
  }
}

TEST(Colex, BinomialValues) {
  EXPECT_EQ(binomial(5, 2), 10U);
  EXPECT_EQ(binomial(6, 3), 20U);
  EXPECT_EQ(binomial(64, 32), 1832624140942590534ULL);
  EXPECT_EQ(binomial(4, 5), 0U);
}

TEST(Colex, CheckKsetRejectsMalformed) {
  EXPECT_THROW(check_kset(std::vector<Vertex>{2, 1, 3}, 3, 5), InvalidInput);
  EXPECT_THROW(check_kset(std::vector<Vertex>{0, 1, 5}, 3, 5), InvalidInput);
  EXPECT_THROW(check_kset(std::vector<Vertex>{0, 1}, 3, 5), InvalidInput);
  EXPECT_NO_THROW(check_kset(std::vector<Vertex>{0, 1, 4}, 3, 5));
}

TEST(Hypergraph, NormalisesAndRejectsDuplicates) {
  Hypergraph h(3, 5, {{4, 0, 2}, {1, 0, 2}});
  EXPECT_EQ(h.edge(0), (KSet{0, 1, 2}));
  EXPECT_EQ(h.edge(1), (KSet{0, 2, 4}));
  EXPECT_THROW(Hypergraph(3, 5, {{0, 1, 2}, {2, 1, 0}}), InvalidInput);
  EXPECT_THROW(Hypergraph(3, 5, {{0, 1, 1}}), InvalidInput);
  EXPECT_THROW(Hypergraph(3, 5, {{0, 1, 5}}), InvalidInput);
  EXPECT_EQ(h.degrees(), (std::vector<int>{2, 1, 2, 0, 1}));
}

TEST(Hypergraph, CompleteAndUnion) {
  const auto k5 = complete_hypergraph(3, 5);
  EXPECT_EQ(k5.size(), 10U);
  const auto u = k5.disjoint_union(single_edge(3));
  EXPECT_EQ(u.order(), 8);
  EXPECT_EQ(u.size(), 11U);
  EXPECT_TRUE(u.has_edge({5, 6, 7}));
  EXPECT_EQ(single_edge(3).with_order(6).order(), 6);
}

TEST(Coloring, InducedAndPermutedAgreeWithDefinition) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = oracle::random_coloring(3, 7, 0.5, rng);
    std::vector<Vertex> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto p = c.permuted(perm);
    for_each_kset(7, 3, [&](const KSet& s) {
      EXPECT_EQ(oracle::color_of(p, {perm[s[0]], perm[s[1]], perm[s[2]]}), c.color(s));
    });
    const std::vector<Vertex> sub{5, 1, 3, 6};
    const auto ind = c.induced(sub);
    for_each_kset(4, 3, [&](const KSet& s) {
      EXPECT_EQ(ind.color(s), oracle::color_of(c, {sub[s[0]], sub[s[1]], sub[s[2]]}));
    });
    EXPECT_EQ(c.inverted().count_red(), c.num_subsets() - c.count_red());
  }
}

TEST(Coloring, BytesRoundTripAndColorClass) {
  std::mt19937_64 rng(4);
  const auto c = oracle::random_coloring(3, 8, 0.3, rng);
  EXPECT_EQ(TwoColoring::from_bytes(3, 8, c.to_bytes()), c);
  EXPECT_EQ(c.color_class(Color::kRed).size(), c.count_red());
  EXPECT_EQ(c.color_unsorted({5, 0, 2}), c.color(KSet{0, 2, 5}));
}

TEST(Tournament, Constructors) {
  const auto t = Tournament::quadratic_residue(7);
  for (int i = 0; i < 7; ++i) EXPECT_EQ(__builtin_popcount(t.out_mask(i)), 3);
  EXPECT_FALSE(oracle::has_transitive(t, 4));
  EXPECT_TRUE(oracle::has_transitive(t, 3));
  EXPECT_FALSE(oracle::has_transitive(Tournament::cyclic_triangle(), 3));
  EXPECT_TRUE(oracle::has_transitive(Tournament::transitive(5), 5));
  EXPECT_THROW(Tournament::quadratic_residue(5), InvalidInput);
}

TEST(Generators, PathsAndTournamentHypergraph) {
  const auto p = ell_path(3, 2, 6);
  EXPECT_EQ(p.size(), 4U);
  EXPECT_EQ(ell_path(3, 1, 7).size(), 3U);
  EXPECT_EQ(ell_cycle(3, 1, 6).size(), 3U);
  EXPECT_EQ(ell_cycle(3, 2, 5).size(), 5U);
  const auto tt = tournament_hypergraph(Tournament::transitive(3), 2);
  EXPECT_EQ(tt.graph.order(), 6);
  EXPECT_EQ(tt.graph.size(), 3U * 2);  // 3 arcs, C(2,2)*2 edges each
  const auto f = fano();
  EXPECT_EQ(f.size(), 7U);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      int common = 0;
      for (Vertex a : f.edge(i))
        for (Vertex b : f.edge(j)) common += a == b;
      EXPECT_EQ(common, 1);
    }
}

TEST(Profile, MatchesBruteForce) {
  std::vector<Hypergraph> cases = {complete_hypergraph(3, 4), complete_hypergraph(3, 5), single_edge(3), fano(),
                                   ell_path(3, 2, 5), ell_path(3, 1, 7),
                                   tournament_hypergraph(Tournament::transitive(3), 2).graph,
                                   tournament_hypergraph(Tournament::cyclic_triangle(), 2).graph,
                                   complete_hypergraph(2, 4)};
  for (const auto& h : cases) {
    const auto p = ramsey_profile(h);
    const auto o = oracle::profile(h);
    EXPECT_EQ(p.chi, o.chi);
    EXPECT_EQ(p.sigma, o.sigma);
    std::vector<int> col(h.order());
    EXPECT_TRUE(is_proper_coloring(h, p.witness));
  }
}

TEST(Profile, BurrBound) {
  EXPECT_EQ(burr_bound(4, 2, 2).value, 5);
  EXPECT_EQ(burr_bound(5, 3, 1).value, 9);
  EXPECT_FALSE(burr_bound(2, 2, 3).hypothesis_holds);
  const auto edgeless = ramsey_profile(Hypergraph(3, 4, {}));
  EXPECT_TRUE(edgeless.edgeless);
  EXPECT_EQ(edgeless.sigma, 4);
}

TEST(Pattern, MiniLanguage) {
  EXPECT_EQ(parse_pattern("path:3:2:5").hypergraph(), ell_path(3, 2, 5));
  EXPECT_EQ(parse_pattern("cycle:3:1:6").kind(), Pattern::Kind::kCycle);
  EXPECT_EQ(parse_pattern("clique:3:4").hypergraph(), complete_hypergraph(3, 4));
  EXPECT_EQ(parse_pattern("fano").hypergraph(), fano());
  EXPECT_EQ(parse_pattern("tth:3:2").hypergraph(), tournament_hypergraph(Tournament::transitive(3), 2).graph);
  EXPECT_EQ(parse_pattern("edge:4").hypergraph(), single_edge(4));
  EXPECT_EQ(parse_pattern("path:3:2:5").label(), "path:3:2:5");
  for (const char* bad : {"path:3:3:5", "clique:3", "tth:0:2", "nope", "path:a:b:c"})
    EXPECT_THROW(parse_pattern(bad), InvalidInput) << bad;
  EXPECT_FALSE(is_pattern_spec("file.json"));
}

TEST(JsonIo, KnownVectors) {
  const std::string text = "foobar";
  EXPECT_EQ(base64_encode(std::vector<std::uint8_t>(text.begin(), text.end())), "Zm9vYmFy");
  EXPECT_EQ(base64_decode("Zm9vYmE="), (std::vector<std::uint8_t>{'f', 'o', 'o', 'b', 'a'}));
  EXPECT_THROW(base64_decode("@@@"), InvalidInput);
  EXPECT_EQ(content_hash(""), "0e5751c026e543b2e8ab2eb06099daa1d1e5df47778f7787faab45cdf12fe3a8");
}

TEST(JsonIo, RoundTrips) {
  std::mt19937_64 rng(5);
  const auto c = oracle::random_coloring(3, 9, 0.5, rng);
  EXPECT_EQ(coloring_from_json(coloring_to_json(c)), c);
  const auto h = fano();
  EXPECT_EQ(hypergraph_from_json(hypergraph_to_json(h)), h);
  const auto t = Tournament::quadratic_residue(7);
  EXPECT_EQ(tournament_from_json(tournament_to_json(t)), t);
  Json bad = coloring_to_json(c);
  bad["n"] = 10;
  EXPECT_THROW(coloring_from_json(bad), InvalidInput);
}

TEST(JsonIo, CertificateRoundTrip) {
  Certificate cert;
  cert.kind = CertificateKind::kBlueEmbedding;
  cert.color = Color::kBlue;
  cert.k = 3;
  cert.mapping = {3, 1, 2, 0};
  cert.pattern = complete_hypergraph(3, 4);
  CertificateContext ctx;
  ctx.coloring = TwoColoring(3, 5);
  CertificateContext back;
  const auto parsed = certificate_from_json(certificate_to_json(cert, ctx), &back);
  EXPECT_EQ(parsed.kind, cert.kind);
  EXPECT_EQ(parsed.mapping, cert.mapping);
  EXPECT_EQ(*parsed.pattern, *cert.pattern);
  EXPECT_EQ(*back.coloring, *ctx.coloring);
}
