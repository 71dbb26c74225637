#include <gtest/gtest.h>

#include <random>
#include <set>

#include "simplepaths/oracle.hpp"
#include "test_util.hpp"

using namespace simplepaths;
using namespace simplepaths::testing;

TEST(SimplePaths, Invariants) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    auto t = random_digraph(rng, 1 + trial % 6, 0.5, 0.3);
    for (const auto& p : oracle::simple_paths(t, t.vertex_count())) {
      std::set<Vertex> distinct(p.vertices.begin(), p.vertices.end());
      EXPECT_EQ(distinct.size(), p.vertices.size());
      EXPECT_GE(p.length(), 1u);
      EXPECT_EQ(p.length(), p.closed ? p.vertices.size() : p.vertices.size() - 1);
      for (std::size_t e = 0; e < p.word.size(); ++e) {
        const Vertex from = p.vertices[e];
        const Vertex to = e + 1 < p.vertices.size() ? p.vertices[e + 1] : p.vertices.front();
        EXPECT_EQ(t.arc(p.word[e]), (Arc{from, to}));
      }
    }
  }
}

TEST(SimplePaths, TriangleHandCount) {
  auto g = triangle<CountRing>();
  auto paths = oracle::simple_paths(g, 3);
  std::size_t open = 0, closed = 0;
  for (const auto& p : paths) (p.closed ? closed : open)++;
  EXPECT_EQ(open, 6u);
  EXPECT_EQ(closed, 3u);
  EXPECT_EQ(oracle::canonical_cycles(g, 3).size(), 1u);
}

TEST(Census, Petersen) {
  auto g = undirected<CountRing>(10, petersen_edges());
  auto census = oracle::directed_cycle_census(g, 10);
  // Directed counts: each undirected k-cycle (k >= 3) twice, each edge once as a 2-cycle.
  EXPECT_EQ(census[2], 15u);
  EXPECT_EQ(census[5], 24u);
  EXPECT_EQ(census[6], 20u);
  EXPECT_EQ(census[8], 30u);
  EXPECT_EQ(census[9], 40u);
  for (std::size_t k : {1u, 3u, 4u, 7u, 10u}) EXPECT_EQ(census[k], 0u) << k;

  auto series = oracle::dfs_path_series(g, 10);
  std::map<std::size_t, BigInt> trace;
  for (const auto& [v, p] : series.closed)
    for (std::size_t k = 1; k <= 10; ++k) trace[k] += p[k];
  EXPECT_EQ(trace[5], 120);
  EXPECT_EQ(trace[6], 120);
  EXPECT_EQ(trace[8], 240);
  EXPECT_EQ(trace[9], 360);
  EXPECT_EQ(trace[10], 0);
  EXPECT_EQ(oracle::dfs_hamiltonian(g).ham_cycles, 0);
}

TEST(Hamiltonian, CompleteGraphs) {
  auto k5 = oracle::dfs_hamiltonian(undirected<CountRing>(5, complete_edges(5)));
  EXPECT_EQ(k5.ham_cycles, 24);
  for (Vertex i = 0; i < 5; ++i)
    for (Vertex j = 0; j < 5; ++j) EXPECT_EQ(k5.op(i, j), i == j ? 0 : 6);
}

TEST(Hamiltonian, DirectedTriangle) {
  auto h = oracle::dfs_hamiltonian(triangle<CountRing>());
  EXPECT_EQ(h.ham_cycles, 1);
  EXPECT_EQ(h.op(0, 2), 1);
  EXPECT_EQ(h.op(0, 1), 0);
}

TEST(Filters, Examples) {
  auto path = undirected<CountRing>(3, path_edges(3));
  EXPECT_EQ(oracle::filter_connected_sets(path, 3).size(), 6u);
  EXPECT_EQ(oracle::filter_connected_sets(undirected<CountRing>(4, complete_edges(4)), 4).size(), 15u);
  EXPECT_EQ(oracle::filter_connected_dominating_sets(path).size(), 4u);
  auto sets = oracle::filter_connected_sets(path, 2);
  EXPECT_TRUE(std::is_sorted(sets.begin(), sets.end()));
  EXPECT_EQ(sets.size(), 5u);
}

TEST(WordSeries, OneTermPerPath) {
  auto t = make_topology(3, {{0, 1}, {1, 2}, {0, 2}, {2, 0}});
  auto g = Graph<WordRing>::with_default_weights(t);
  auto res = oracle::dfs_path_series(g, 3);
  const auto& p02 = res.open.at({0, 2});
  ASSERT_EQ(p02[1].terms().size(), 1u);
  ASSERT_EQ(p02[2].terms().size(), 1u);
  EXPECT_EQ(p02[2].terms()[0].word, (Word{*t.find_arc(0, 1), *t.find_arc(1, 2)}));
}
