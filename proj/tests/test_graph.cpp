#include <gtest/gtest.h>

#include <random>

#include "dfds/graph.hpp"
#include "oracles.hpp"

using namespace dfds;

namespace {

void expect_simple(const Graph &g) {
  for (int i = 0; i < g.order(); ++i) {
    EXPECT_FALSE(g.adjacent(i, i));
    for (int j = 0; j < g.order(); ++j)
      EXPECT_EQ(g.adjacent(i, j), g.adjacent(j, i));
  }
}

} // namespace

TEST(Degrees, EmptyCompleteAndCube) {
  EXPECT_EQ(degrees(Graph(3)), (DegreeSequence{0, 0, 0}));
  EXPECT_EQ(degrees(oracle::complete(4)), (DegreeSequence{3, 3, 3, 3}));
  EXPECT_EQ(degrees(oracle::cube_q3()), (DegreeSequence{3, 3, 3, 3, 3, 3, 3, 3}));
}

TEST(Degrees, SumIsTwiceEdgeCount) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    auto g = oracle::random_graph(12, 0.4, rng);
    EXPECT_EQ(degrees(g).sum(), 2L * g.edge_count());
  }
}

TEST(EdgesAmong, CountsSixPairs) {
  EXPECT_EQ(edges_among(oracle::complete(4), {0, 1, 2, 3}), 6);
  EXPECT_EQ(edges_among(oracle::complete(6), {5, 1, 3, 0}), 6);
  EXPECT_EQ(edges_among(Graph(5), {0, 1, 2, 4}), 0);
  Graph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(edges_among(diamond, {0, 1, 2, 3}), 5);
}

TEST(EdgesAmong, RejectsBadQuads) {
  Graph g(5);
  EXPECT_THROW(edges_among(g, {0, 1, 1, 2}), InputError);
  EXPECT_THROW(edges_among(g, {0, 1, 2, 5}), InputError);
  EXPECT_THROW(edges_among(g, {-1, 1, 2, 3}), InputError);
}

TEST(DiamondFree, SmallCases) {
  EXPECT_FALSE(is_diamond_free(oracle::complete(4)));
  EXPECT_TRUE(is_diamond_free(oracle::cycle(5)));
  EXPECT_TRUE(is_diamond_free(oracle::cube_q3()));
  Graph k4_minus_edge = oracle::complete(4);
  k4_minus_edge.remove_edge(0, 3);
  EXPECT_FALSE(is_diamond_free(k4_minus_edge));
  // Two triangles sharing only a vertex (bowtie) are fine.
  Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  EXPECT_TRUE(is_diamond_free(bowtie));
}

TEST(DiamondFree, AgreesWithQuadScanAndTriangleFormulation) {
  std::mt19937_64 rng(2024);
  int with_diamond = 0;
  for (int t = 0; t < 400; ++t) {
    int n = 4 + static_cast<int>(rng() % 7); // 4..10
    double p = 0.1 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
    auto g = oracle::random_graph(n, p, rng);
    expect_simple(g);
    bool fast = is_diamond_free(g);
    EXPECT_EQ(fast, oracle::diamond_free_by_quads(g));
    EXPECT_EQ(fast, oracle::diamond_free_by_triangles(g));
    with_diamond += !fast;
  }
  // Both verdicts must actually occur for the comparison to mean anything.
  EXPECT_GT(with_diamond, 50);
  EXPECT_LT(with_diamond, 350);
}

TEST(Complement, Basics) {
  EXPECT_EQ(complement(oracle::complete(4)), Graph(4));
  Graph matching(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  auto c = complement(matching);
  expect_simple(c);
  for (int v = 0; v < 8; ++v)
    EXPECT_EQ(c.degree(v), 6);
}

TEST(Complement, InvolutionAndDegreeRelation) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + static_cast<int>(rng() % 20);
    auto g = oracle::random_graph(n, 0.5, rng);
    auto c = complement(g);
    expect_simple(c);
    EXPECT_EQ(complement(c), g);
    for (int v = 0; v < n; ++v)
      EXPECT_EQ(c.degree(v), n - 1 - g.degree(v));
  }
}

TEST(Graph, RejectsLoopsAndBadOrder) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), InputError);
  EXPECT_THROW(g.add_edge(0, 3), InputError);
  EXPECT_THROW(Graph(65), InputError);
}

TEST(Serialization, MatrixTextFormat) {
  Graph path(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(to_matrix_text(path), "3\n0 1 0\n1 0 1\n0 1 0\n");
  EXPECT_EQ(to_json_text(path), R"({"edges":[[0,1],[1,2]],"n":3})");
}

TEST(Serialization, RoundTripsBitExact) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    auto g = oracle::random_graph(1 + static_cast<int>(rng() % 16), 0.4, rng);
    auto text = to_matrix_text(g);
    EXPECT_EQ(from_matrix_text(text), g);
    EXPECT_EQ(to_matrix_text(from_matrix_text(text)), text);
    auto json = to_json_text(g);
    EXPECT_EQ(graph_from_json_text(json), g);
    EXPECT_EQ(to_json_text(graph_from_json_text(json)), json);
  }
}

TEST(Serialization, RejectsMalformed) {
  EXPECT_THROW(from_matrix_text("3\n0 1 0\n1 0 1\n"), InputError);       // truncated
  EXPECT_THROW(from_matrix_text("2\n0 1\n0 0\n"), InputError);           // asymmetric
  EXPECT_THROW(from_matrix_text("2\n1 0\n0 0\n"), InputError);           // loop
  EXPECT_THROW(from_matrix_text("2\n0 2\n2 0\n"), InputError);           // not 0/1
  EXPECT_THROW(graph_from_json_text(R"({"n":3,"edges":[[1,0]]})"), InputError);
  EXPECT_THROW(graph_from_json_text(R"({"n":3,"edges":[[0,3]]})"), InputError);
  EXPECT_THROW(graph_from_json_text("{not json"), InputError);
}
