#include <gtest/gtest.h>

#include <random>

#include "simplepaths/graph.hpp"
#include "test_util.hpp"

using namespace simplepaths;
using namespace simplepaths::testing;

TEST(ParseEdgeList, DirectedTriangle) {
  auto g = parse_edge_list<CountRing>("0 1\n1 2\n2 0\n", true);
  EXPECT_EQ(g.vertex_count(), 3u);
  ASSERT_EQ(g.arc_count(), 3u);
  EXPECT_EQ(g.arc(0), (Arc{0, 1}));
  EXPECT_EQ(g.arc(1), (Arc{1, 2}));
  EXPECT_EQ(g.arc(2), (Arc{2, 0}));
  for (const auto& w : g.weights()) EXPECT_EQ(w, 1);
  EXPECT_EQ(g.orientation(), Orientation::Directed);
}

TEST(ParseEdgeList, UndirectedLineExpandsToBothArcs) {
  auto g = parse_edge_list<CountRing>("0 1\n", false);
  ASSERT_EQ(g.arc_count(), 2u);
  EXPECT_TRUE(g.find_arc(0, 1).has_value());
  EXPECT_TRUE(g.find_arc(1, 0).has_value());
  EXPECT_EQ(g.orientation(), Orientation::UndirectedExpanded);
}

TEST(ParseEdgeList, UndirectedSelfLoopIsOneArc) {
  auto g = parse_edge_list<CountRing>("0 0\n0 1 5\n", false);
  EXPECT_EQ(g.arc_count(), 3u);
  EXPECT_EQ(g.entry(0, 1), 5);
  EXPECT_EQ(g.entry(1, 0), 5);
  EXPECT_EQ(g.entry(0, 0), 1);
}

TEST(ParseEdgeList, DuplicateEdgeRejected) {
  try {
    parse_edge_list<CountRing>("0 1\n0 1\n", true);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  // Undirected "0 1" and "1 0" name the same arcs.
  EXPECT_THROW(parse_edge_list<CountRing>("0 1\n1 0\n", false), ParseError);
  EXPECT_NO_THROW(parse_edge_list<CountRing>("0 1\n1 0\n", true));
}

TEST(ParseEdgeList, MalformedLines) {
  EXPECT_THROW(parse_edge_list<CountRing>("0\n", true), ParseError);
  EXPECT_THROW(parse_edge_list<CountRing>("0 1 2 3\n", true), ParseError);
  EXPECT_THROW(parse_edge_list<CountRing>("0 -1\n", true), ParseError);
  EXPECT_THROW(parse_edge_list<CountRing>("a 1\n", true), ParseError);
  EXPECT_THROW(parse_edge_list<CountRing>("0 1 x\n", true), ParseError);
  EXPECT_THROW(parse_edge_list<CountRing>("0 1 1.5\n", true), ParseError);
  EXPECT_NO_THROW(parse_edge_list<FloatRing>("0 1 1.5\n", true));
  EXPECT_THROW(parse_edge_list<FloatRing>("0 1 nan\n", true), ParseError);
}

TEST(ParseEdgeList, CommentsBlankLinesAndHeader) {
  auto g = parse_edge_list<FloatRing>("# a comment\n\nn 4\n0 1 0.25\n  \n1 2\n", true);
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_DOUBLE_EQ(g.entry(0, 1), 0.25);
  EXPECT_DOUBLE_EQ(g.entry(1, 2), 1.0);
  EXPECT_THROW(parse_edge_list<CountRing>("n 2\n0 2\n", true), ParseError);
  EXPECT_THROW(parse_edge_list<CountRing>("n 2\nn 3\n", true), ParseError);
  auto edgeless = parse_edge_list<CountRing>("n 3\n", true);
  EXPECT_EQ(edgeless.vertex_count(), 3u);
  EXPECT_EQ(edgeless.arc_count(), 0u);
}

TEST(ParseEdgeList, GapsInIdsRejectedWithoutHeader) {
  EXPECT_THROW(parse_edge_list<CountRing>("0 2\n", true), ParseError);
  EXPECT_EQ(parse_edge_list<CountRing>("n 3\n0 2\n", true).vertex_count(), 3u);
  EXPECT_THROW(parse_edge_list<CountRing>("", true), ParseError);
}

TEST(ParseEdgeList, WordRingLettersAreArcIds) {
  auto g = parse_edge_list<WordRing>("0 1\n1 2 3\n", true);
  EXPECT_EQ(g.weight(0), WordSum::single({0}));
  EXPECT_EQ(g.weight(1), WordSum::single({1}, 3));
}

TEST(Topology, WeakAdjacencyInvariants) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto t = random_digraph(rng, 1 + trial % 9, 0.4, 0.3);
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
      auto weak = t.weak_neighbors(v);
      EXPECT_TRUE(std::is_sorted(weak.begin(), weak.end()));
      EXPECT_EQ(std::find(weak.begin(), weak.end(), v), weak.end());
      std::vector<Vertex> expect;
      for (Vertex u : t.out_neighbors(v))
        if (u != v) expect.push_back(u);
      for (Vertex u : t.in_neighbors(v))
        if (u != v) expect.push_back(u);
      std::sort(expect.begin(), expect.end());
      expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
      EXPECT_EQ(std::vector<Vertex>(weak.begin(), weak.end()), expect);
      for (Vertex u : weak) {
        auto back = t.weak_neighbors(u);
        EXPECT_NE(std::find(back.begin(), back.end(), v), back.end());
      }
    }
  }
}

TEST(Topology, RejectsBadArcs) {
  EXPECT_THROW(make_topology(2, {{0, 2}}), UsageError);
  EXPECT_THROW(make_topology(2, {{0, 1}, {0, 1}}), UsageError);
  EXPECT_THROW(make_topology(0, {}), UsageError);
}

TEST(Restrict, Examples) {
  auto g = triangle<CountRing>();
  auto m = restrict_to(g, VertexSet(3, {0, 1}));
  ASSERT_EQ(m.dim(), 2u);
  EXPECT_EQ(m.at(0, 1), 1);
  EXPECT_EQ(m.at(0, 0), 0);
  EXPECT_EQ(m.at(1, 0), 0);
  EXPECT_EQ(m.at(1, 1), 0);

  auto m2 = restrict_to(g, VertexSet(3, {0, 2}));
  EXPECT_EQ(m2.index_map, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(m2.at(1, 0), 1);
  EXPECT_EQ(m2.at(0, 1), 0);

  auto full = restrict_to(g, VertexSet::full(3));
  for (Vertex i = 0; i < 3; ++i)
    for (Vertex j = 0; j < 3; ++j) EXPECT_EQ(full.at(i, j), g.entry(i, j));

  EXPECT_THROW(restrict_to(g, VertexSet(3)), UsageError);
}

TEST(Restrict, ReembedReproducesW) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = with_random_weights(rng, random_digraph(rng, 6, 0.5, 0.3));
    auto s = VertexSet::from_mask(6, 1 + rng() % 63);
    auto m = restrict_to(g, s);
    std::vector<BigInt> dense(36, 0);
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j) dense[m.index_map[i] * 6 + m.index_map[j]] = m.at(i, j);
    for (Vertex i = 0; i < 6; ++i)
      for (Vertex j = 0; j < 6; ++j)
        EXPECT_EQ(dense[i * 6 + j], (s.contains(i) && s.contains(j)) ? g.entry(i, j) : BigInt(0));
  }
}

TEST(WeakNeighborhood, Examples) {
  auto tri = triangle<CountRing>();
  EXPECT_EQ(weak_neighborhood(tri, VertexSet(3, {0})), VertexSet(3, {1, 2}));
  EXPECT_TRUE(weak_neighborhood(tri, VertexSet::full(3)).empty());
  auto path = undirected<CountRing>(3, path_edges(3));
  EXPECT_EQ(weak_neighborhood(path, VertexSet(3, {0})), VertexSet(3, {1}));
  EXPECT_THROW(weak_neighborhood(path, VertexSet(3)), UsageError);
}

TEST(IsDominating, Examples) {
  auto tri = triangle<CountRing>();
  EXPECT_TRUE(is_dominating(tri, VertexSet(3, {0})));
  auto path4 = undirected<CountRing>(4, path_edges(4));
  EXPECT_FALSE(is_dominating(path4, VertexSet(4, {0})));
  EXPECT_TRUE(is_dominating(path4, VertexSet::full(4)));
}

TEST(IsDominating, AgreesWithExhaustiveCoverage) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto t = random_digraph(rng, 6, 0.3, 0.2);
    for (std::uint64_t mask = 1; mask < 64; ++mask) {
      auto c = VertexSet::from_mask(6, mask);
      auto nbh = weak_neighborhood(t, c);
      for (Vertex v : nbh) EXPECT_FALSE(c.contains(v));
      bool covers_all = true;
      for (Vertex x = 0; x < 6; ++x) {
        bool covered = c.contains(x);
        for (Vertex y : c) covered = covered || t.find_arc(x, y) || t.find_arc(y, x);
        covers_all = covers_all && covered;
      }
      EXPECT_EQ(is_dominating(t, c), covers_all);
    }
  }
}

TEST(Components, Examples) {
  auto path = undirected<CountRing>(3, path_edges(3));
  auto comps = weakly_connected_components(path, VertexSet(3, {0, 2}));
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], VertexSet(3, {0}));
  EXPECT_EQ(comps[1], VertexSet(3, {2}));

  auto tri = triangle<CountRing>();
  EXPECT_EQ(weakly_connected_components(tri, VertexSet::full(3)), std::vector<VertexSet>{VertexSet::full(3)});
  EXPECT_EQ(weakly_connected_components(tri, VertexSet(3, {0, 2})), std::vector<VertexSet>{VertexSet(3, {0, 2})});
}

TEST(Components, PartitionProperties) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto t = random_digraph(rng, 8, 0.15, 0.2);
    for (int rep = 0; rep < 20; ++rep) {
      auto s = VertexSet::from_mask(8, 1 + rng() % 255);
      auto comps = weakly_connected_components(t, s);
      VertexSet uni(8);
      std::size_t total = 0;
      for (std::size_t a = 0; a < comps.size(); ++a) {
        total += comps[a].size();
        uni |= comps[a];
        if (a > 0) EXPECT_LT(comps[a - 1].min(), comps[a].min());
        EXPECT_EQ(weakly_connected_components(t, comps[a]).size(), 1u);
        for (std::size_t b = a + 1; b < comps.size(); ++b)
          for (Vertex x : comps[a])
            for (Vertex y : comps[b]) {
              EXPECT_FALSE(t.find_arc(x, y).has_value());
              EXPECT_FALSE(t.find_arc(y, x).has_value());
            }
      }
      EXPECT_EQ(uni, s);
      EXPECT_EQ(total, s.size());
    }
  }
}

namespace {

std::vector<BigInt> dense_power(const std::vector<BigInt>& a, std::size_t n, std::size_t m) {
  std::vector<BigInt> result(n * n, 0), base = a;
  for (std::size_t i = 0; i < n; ++i) result[i * n + i] = 1;
  for (std::size_t step = 0; step < m; ++step) {
    std::vector<BigInt> next(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t j = 0; j < n; ++j) next[i * n + j] += result[i * n + l] * base[l * n + j];
    result = std::move(next);
  }
  return result;
}

std::vector<BigInt> padded(const LocalMatrix<CountRing>& m, std::size_t n) {
  std::vector<BigInt> out(n * n, 0);
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out[m.index_map[i] * n + m.index_map[j]] = m.at(i, j);
  return out;
}

}  // namespace

// W_S^m equals the sum of W_{C_i}^m over the components of G(S).
TEST(Components, MatrixPowerDecomposition) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + trial % 7;
    auto g = with_random_weights(rng, random_digraph(rng, n, 0.25, 0.3));
    auto s = VertexSet::from_mask(n, 1 + rng() % ((std::uint64_t{1} << n) - 1));
    auto whole = padded(restrict_to(g, s), n);
    for (std::size_t m = 1; m <= n; ++m) {
      std::vector<BigInt> sum(n * n, 0);
      for (const auto& c : weakly_connected_components(g, s)) {
        auto p = dense_power(padded(restrict_to(g, c), n), n, m);
        for (std::size_t e = 0; e < n * n; ++e) sum[e] += p[e];
      }
      EXPECT_EQ(dense_power(whole, n, m), sum) << "n=" << n << " m=" << m;
    }
  }
}
