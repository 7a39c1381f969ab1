#include <gtest/gtest.h>

#include <set>

#include "dfds/designs.hpp"
#include "dfds/pipeline.hpp"
#include "oracles.hpp"

using namespace dfds;

namespace {

ClimbOptions checked(std::uint64_t cap = 1'000'000) { return ClimbOptions{cap, true}; }

// Points with no block through them, counted from scratch.
int isolated_in(const Graph &g) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v)
    count += g.degree(v) == 0;
  return count;
}

std::vector<std::array<int, 3>> triangles(const Graph &g) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      for (int c = b + 1; c < g.order(); ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c))
          out.push_back({a, b, c});
  return out;
}

} // namespace

TEST(SeededRng, EngineIsTheStandardMersenneTwister) {
  // The standard pins the 10000th output of a default-constructed mt19937_64.
  std::mt19937_64 reference;
  reference.discard(9999);
  EXPECT_EQ(reference(), 9981545732273789042ULL);
  SeededRng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    auto x = a.below(13);
    EXPECT_LT(x, 13u);
    EXPECT_EQ(x, b.below(13));
  }
  EXPECT_THROW(a.below(0), InputError);
}

TEST(Sts, SmallOrders) {
  auto seven = stinson_sts(7, RngSpec{1}, checked());
  EXPECT_EQ(seven.blocks.size(), 7u);
  EXPECT_TRUE(covers_every_pair_once(seven));
  auto three = stinson_sts(3, RngSpec{1}, checked());
  EXPECT_EQ(three.blocks, (std::vector<std::vector<int>>{{0, 1, 2}}));
  auto nine = stinson_sts(9, RngSpec{5}, checked());
  EXPECT_EQ(nine.blocks.size(), 12u);
  EXPECT_TRUE(covers_every_pair_once(nine));
  EXPECT_TRUE(stinson_sts(1, RngSpec{0}).blocks.empty());
}

TEST(Sts, RejectsImpossibleOrders) {
  for (int n : {0, 2, 4, 5, 6, 8, 11, 12})
    EXPECT_THROW(stinson_sts(n, RngSpec{1}), InputError) << n;
  EXPECT_THROW(stinson_sts(7, RngSpec{1}, ClimbOptions{0, false}), InputError);
}

TEST(Sts, IterationCapIsInconclusive) {
  // 12 blocks need at least 12 moves.
  EXPECT_THROW(stinson_sts(9, RngSpec{1}, std::uint64_t{3}), InconclusiveError);
}

TEST(Sts, ManySeedsKeepLambdaOneAndComplete) {
  for (int n : {7, 9, 13, 15, 19, 21})
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto d = stinson_sts(n, RngSpec{seed}, checked());
      ASSERT_TRUE(covers_every_pair_once(d)) << n << " seed " << seed;
      ASSERT_EQ(static_cast<int>(d.blocks.size()), n * (n - 1) / 6);
    }
}

TEST(Sts, ReproducibleBySeed) {
  EXPECT_EQ(stinson_sts(15, RngSpec{77}), stinson_sts(15, RngSpec{77}));
  std::set<std::vector<std::vector<int>>> distinct;
  for (std::uint64_t s = 0; s < 10; ++s)
    distinct.insert(stinson_sts(15, RngSpec{s}).blocks);
  EXPECT_GT(distinct.size(), 1u);
}

TEST(Designs, PublishedExamples) {
  Design sts7{7, {{0, 1, 2}, {0, 5, 6}, {0, 3, 4}, {1, 4, 5}, {2, 3, 5}, {2, 6, 4}, {1, 3, 6}}};
  EXPECT_TRUE(covers_every_pair_once(sts7));
  EXPECT_EQ(uncovered_pairs_graph(sts7), Graph(7));

  Design mixed{8, {{0, 1, 2, 3}, {0, 4, 5}, {0, 6, 7}, {1, 4, 6}, {1, 5, 7}}};
  EXPECT_TRUE(is_partial_linear_space(mixed));
  Graph expected(8);
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      bool covered = false;
      for (const auto &b : mixed.blocks)
        covered = covered || (std::find(b.begin(), b.end(), i) != b.end() &&
                              std::find(b.begin(), b.end(), j) != b.end());
      if (!covered)
        expected.add_edge(i, j);
    }
  auto lines_of_size_two = uncovered_pairs_graph(mixed);
  EXPECT_EQ(lines_of_size_two, expected);
  EXPECT_EQ(lines_of_size_two.edge_count(), 28 - 6 - 4 * 3);

  EXPECT_EQ(uncovered_pairs_graph(Design{4, {}}), oracle::complete(4));
}

TEST(Designs, RejectsDoubleCoverage) {
  EXPECT_FALSE(is_partial_linear_space(Design{5, {{0, 1, 2}, {0, 1, 3}}}));
  EXPECT_FALSE(is_partial_linear_space(Design{5, {{0, 1, 5}}}));
  EXPECT_FALSE(covers_every_pair_once(Design{4, {{0, 1, 2}}}));
}

TEST(Four, FourPointsGiveOneBlock) {
  auto r = stinson_four(4, RngSpec{3}, checked());
  EXPECT_EQ(r.design.blocks, (std::vector<std::vector<int>>{{0, 1, 2, 3}}));
  EXPECT_TRUE(r.report.is_complete_design);
  EXPECT_EQ(r.report.complement, Graph(4));
}

TEST(Four, ThirteenPointDichotomy) {
  int complete = 0, partial = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto r = stinson_four(13, RngSpec{seed}, checked());
    ASSERT_TRUE(is_partial_linear_space(r.design));
    ASSERT_TRUE(r.report.complement_diamond_free);
    if (r.report.is_complete_design) {
      EXPECT_EQ(r.report.s4, 13);
      ++complete;
      continue;
    }
    ++partial;
    // Observed terminal structure: ten blocks; one point on four blocks, the
    // other twelve on three, so the complement is cubic on twelve points and
    // its only triangles are four vertex-disjoint ones.
    EXPECT_EQ(r.report.s4, 10);
    EXPECT_EQ(isolated_in(r.report.complement), 1);
    EXPECT_EQ(r.report.complement.edge_count(), 18);
    auto tris = triangles(r.report.complement);
    ASSERT_EQ(tris.size(), 4u);
    std::set<int> touched;
    for (const auto &t : tris)
      touched.insert(t.begin(), t.end());
    EXPECT_EQ(touched.size(), 12u);
  }
  EXPECT_GT(complete, 0);
  EXPECT_GT(partial, 0);
}

TEST(Four, SixteenPointComplementsSatisfyArithmetic) {
  int partial = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    FourResult r;
    try {
      r = stinson_four(16, RngSpec{seed}, ClimbOptions{200'000, true});
    } catch (const InconclusiveError &) {
      continue;
    }
    const auto &rep = r.report;
    ASSERT_TRUE(is_partial_linear_space(r.design));
    EXPECT_TRUE(rep.complement_diamond_free);
    EXPECT_TRUE(rep.complement_degrees_div3);
    EXPECT_TRUE(rep.complement_edges_div6);
    if (rep.is_complete_design)
      EXPECT_EQ(rep.s4, 20);
    else
      ++partial;
  }
  EXPECT_GT(partial, 10);
}

TEST(Four, ReproducibleBySeed) {
  auto a = stinson_four(16, RngSpec{9});
  auto b = stinson_four(16, RngSpec{9});
  EXPECT_EQ(a.design, b.design);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(Classify, CompleteDesign) {
  // Projective plane of order 3 from the difference set {0,1,3,9} mod 13.
  Design plane{13, {}};
  for (int i = 0; i < 13; ++i)
    plane.blocks.push_back({i, (i + 1) % 13, (i + 3) % 13, (i + 9) % 13});
  canonicalize(plane);
  ASSERT_TRUE(covers_every_pair_once(plane));
  auto rep = classify_structure(plane);
  EXPECT_TRUE(rep.is_complete_design);
  EXPECT_EQ(rep.s4, 13 * 12 / 12);
  EXPECT_EQ(rep.complement, Graph(13));
  EXPECT_EQ(rep.points_in_max_blocks, 13);
}

TEST(Classify, FieldsRecomputedFromScratch) {
  // First partial 13-point structure in seed order.
  FourResult r;
  std::uint64_t seed = 0;
  for (;; ++seed) {
    r = stinson_four(13, RngSpec{seed});
    if (!r.report.is_complete_design)
      break;
  }
  const auto &d = r.design;
  const auto &rep = r.report;
  std::vector<int> through(13, 0);
  for (const auto &b : d.blocks)
    for (int p : b)
      ++through[p];
  int uncovered = 0;
  bool degrees_div3 = true;
  for (int i = 0; i < 13; ++i) {
    int deg = 0;
    for (int j = 0; j < 13; ++j) {
      if (i == j)
        continue;
      bool covered = false;
      for (const auto &b : d.blocks)
        covered = covered || (std::count(b.begin(), b.end(), i) && std::count(b.begin(), b.end(), j));
      EXPECT_EQ(rep.complement.adjacent(i, j), !covered);
      deg += !covered;
      uncovered += !covered && i < j;
    }
    degrees_div3 = degrees_div3 && deg % 3 == 0;
  }
  EXPECT_EQ(rep.s4, static_cast<int>(d.blocks.size()));
  EXPECT_EQ(uncovered, 78 - 6 * rep.s4);
  EXPECT_EQ(rep.complement_degrees_div3, degrees_div3);
  EXPECT_EQ(rep.complement_edges_div6, uncovered % 6 == 0);
  EXPECT_EQ(rep.complement_diamond_free, oracle::diamond_free_by_quads(rep.complement));
  EXPECT_EQ(rep.points_in_max_blocks, static_cast<int>(std::count(through.begin(), through.end(), 4)));
}

TEST(Serialization, DesignFormats) {
  Design d{7, {{0, 1, 2}, {0, 3, 4}}};
  EXPECT_EQ(to_block_text(d), "(0,1,2)\n(0,3,4)\n");
  EXPECT_EQ(to_json(d).dump(), R"({"blocks":[[0,1,2],[0,3,4]],"n":7})");
}
