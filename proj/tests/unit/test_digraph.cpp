#include <gtest/gtest.h>

#include <random>
#include <set>

#include <census/digraph.hpp>

#include "test_support.hpp"

using namespace census;

namespace {

test_support::Matrix to_matrix(const Digraph& d) {
  test_support::Matrix m(static_cast<std::size_t>(d.n()),
                         std::vector<bool>(static_cast<std::size_t>(d.n()), false));
  for (int i = 0; i < d.n(); ++i)
    for (int j = 0; j < d.n(); ++j)
      if (i != j && d.has_edge(i, j)) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
  return m;
}

DigraphStats matrix_stats(const test_support::Matrix& adj) {
  const std::size_t n = adj.size();
  DigraphStats s;
  auto reach = test_support::closure(adj);
  for (std::size_t i = 0; i < n; ++i) {
    bool has_in = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (!adj[i][j]) continue;
      ++s.edges;
      if (i > j) ++s.descents;
    }
    for (std::size_t j = 0; j < n; ++j) has_in = has_in || adj[j][i];
    if (!has_in) ++s.sources;
  }
  s.strong = test_support::matrix_strong(adj);
  s.acyclic = test_support::matrix_acyclic(adj);
  // A component is a source component when nothing outside it reaches it.
  std::set<std::size_t> leaders;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t leader = v;
    for (std::size_t w = 0; w < n; ++w)
      if (reach[v][w] && reach[w][v]) leader = std::min(leader, w);
    bool entered = false;
    for (std::size_t w = 0; w < n; ++w)
      if (reach[w][v] && !reach[v][w]) entered = true;
    if (!entered) leaders.insert(leader);
  }
  s.ssc = static_cast<int>(leaders.size());
  return s;
}

}  // namespace

TEST(Digraph, PairIndexLayout) {
  EXPECT_EQ(Digraph::pair_count(3), 6);
  EXPECT_EQ(Digraph::pair_index(3, 0, 1), 0);
  EXPECT_EQ(Digraph::pair_index(3, 0, 2), 1);
  EXPECT_EQ(Digraph::pair_index(3, 1, 0), 2);
  EXPECT_EQ(Digraph::pair_index(3, 1, 2), 3);
  EXPECT_EQ(Digraph::pair_index(3, 2, 0), 4);
  EXPECT_EQ(Digraph::pair_index(3, 2, 1), 5);
  EXPECT_EQ(Digraph::descent_mask(3), (1ULL << 2) | (1ULL << 4) | (1ULL << 5));
}

TEST(Digraph, Validation) {
  EXPECT_THROW(Digraph(3, 1ULL << 6), std::invalid_argument);
  EXPECT_THROW(Digraph(8, 0), std::invalid_argument);
  EXPECT_THROW(Digraph::from_edges(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Digraph::from_edges(3, {{1, 4}}), std::invalid_argument);
  auto d = Digraph::from_edges(3, {{1, 2}, {3, 1}});
  EXPECT_TRUE(d.has_edge(0, 1));
  EXPECT_TRUE(d.has_edge(2, 0));
  EXPECT_FALSE(d.has_edge(1, 0));
  EXPECT_EQ(d.out_neighbors(0), 0b010U);
}

TEST(DigraphStats, Examples) {
  auto s = digraph_stats(Digraph::from_edges(2, {{2, 1}}));
  EXPECT_EQ(s.edges, 1);
  EXPECT_EQ(s.descents, 1);
  EXPECT_FALSE(s.strong);
  EXPECT_TRUE(s.acyclic);
  EXPECT_EQ(s.sources, 1);
  EXPECT_EQ(s.ssc, 1);

  s = digraph_stats(Digraph::from_edges(2, {{1, 2}, {2, 1}}));
  EXPECT_TRUE(s.strong);
  EXPECT_EQ(s.descents, 1);
  EXPECT_EQ(s.edges, 2);

  s = digraph_stats(Digraph(3, 0));
  EXPECT_TRUE(s.acyclic);
  EXPECT_EQ(s.sources, 3);
  EXPECT_EQ(s.ssc, 3);
}

TEST(DigraphStats, CycleWithTail) {
  // 1 -> 2 -> 3 -> 1, plus 3 -> 4 and 5 isolated.
  auto s = digraph_stats(Digraph::from_edges(5, {{1, 2}, {2, 3}, {3, 1}, {3, 4}}));
  EXPECT_FALSE(s.strong);
  EXPECT_FALSE(s.acyclic);
  EXPECT_EQ(s.sources, 1);
  EXPECT_EQ(s.ssc, 2);
  EXPECT_EQ(s.descents, 1);
}

TEST(DigraphStats, MatchesMatrixOracleOnRandomDigraphs) {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 7; ++n) {
    const int bits = Digraph::pair_count(n);
    std::uniform_int_distribution<int> density(0, 100);
    for (int trial = 0; trial < 300; ++trial) {
      const int p = density(rng);
      std::uint64_t mask = 0;
      for (int b = 0; b < bits; ++b)
        if (static_cast<int>(rng() % 100) < p) mask |= 1ULL << b;
      Digraph d(n, mask);
      auto got = digraph_stats(d);
      EXPECT_EQ(got, matrix_stats(to_matrix(d))) << "n=" << n << " mask=" << mask;
      EXPECT_LE(got.descents, got.edges);
      if (got.strong) EXPECT_EQ(got.ssc, 1);
      if (got.acyclic) EXPECT_GE(got.sources, 1);
    }
  }
}

TEST(StrongComponents, PartitionVertices) {
  auto d = Digraph::from_edges(4, {{1, 2}, {2, 1}, {3, 4}});
  auto comps = strong_components(4, adjacency(4, d.edges()));
  VertexSet seen = 0;
  for (auto c : comps) {
    EXPECT_EQ(seen & c, 0U);
    seen |= c;
  }
  EXPECT_EQ(seen, 0b1111U);
  EXPECT_EQ(comps.size(), 3U);
}
