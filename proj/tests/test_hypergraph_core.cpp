#include <algorithm>
#include <sstream>

#include <gtest/gtest.h>

#include "hyperalloc/hyperalloc.hpp"
#include "oracles.hpp"

using namespace hyperalloc;

namespace {

constexpr Vertex a = 0, b = 1, c = 2, d = 3;

}  // namespace

TEST(Hypergraph, DeduplicatesAsSets) {
  Hypergraph h(4);
  EXPECT_TRUE(h.add_edge({2, 0, 1}));
  EXPECT_FALSE(h.add_edge({1, 2, 0}));
  EXPECT_FALSE(h.add_edge({0, 0, 1, 2}));
  EXPECT_EQ(h.n_edges(), 1u);
  EXPECT_EQ(h.find_edge({0, 1, 2}), std::optional<std::size_t>{0});
}

TEST(Hypergraph, RejectsEmptyAndForeignEdges) {
  Hypergraph h(3);
  EXPECT_THROW(h.add_edge(Hyperedge{}), std::invalid_argument);
  EXPECT_THROW(h.add_edge({0, 5}), std::out_of_range);
}

TEST(Hypergraph, SingletonCompletionCoversEverything) {
  Hypergraph h(5);
  h.add_edge({0, 1});
  EXPECT_FALSE(h.covers_all_vertices());
  EXPECT_EQ(h.complete_with_singletons(), 3u);
  EXPECT_TRUE(h.covers_all_vertices());
  EXPECT_EQ(h.complete_with_singletons(), 0u);
}

TEST(Incidence, SevenVertexThirdEdgeColumn) {
  // Seven vertices x_1..x_7 (ids 0..6); e_3 = {x_1, x_5, x_6} is the third
  // edge. Only e_3 is pinned; the other edges are placeholders.
  Hypergraph h(7);
  h.add_edge({0, 1});
  h.add_edge({1, 2});
  h.add_edge({0, 4, 5});
  h.add_edge({3});
  h.add_edge({6});
  const IncidenceMatrix m = incidence_matrix(h);
  EXPECT_TRUE(m(0, 2));
  EXPECT_TRUE(m(4, 2));
  EXPECT_TRUE(m(5, 2));
  EXPECT_EQ(m.column_sum(2), 3u);
  for (std::size_t r : {1, 2, 3, 6}) EXPECT_FALSE(m(r, 2));
}

TEST(Incidence, SingleSingleton) {
  Hypergraph h(1);
  h.add_edge({0});
  const IncidenceMatrix m = incidence_matrix(h);
  EXPECT_EQ(m.n_rows(), 1u);
  EXPECT_EQ(m.n_cols(), 1u);
  EXPECT_TRUE(m(0, 0));
}

TEST(Incidence, RoundTripRandom) {
  RandomStream rng(5);
  for (int i = 0; i < 100; ++i) {
    const Hypergraph h = oracle::random_hypergraph(2 + rng.uniform_index(9), 1 + rng.uniform_index(12), 4, rng);
    EXPECT_EQ(incidence_matrix(h).to_hypergraph(), h);
  }
}

TEST(EdgesAt, Triangle) {
  const Hypergraph h(3, {{a, b}, {a, c}, {b, c}});
  EXPECT_EQ(edges_at(h, a), (std::vector<Hyperedge>{{a, b}, {a, c}}));
  EXPECT_THROW(edges_at(h, 7), std::out_of_range);
}

TEST(EdgesAt, UncoveredVertex) {
  const Hypergraph h(3, {{a, b}});
  EXPECT_TRUE(edges_at(h, c).empty());
}

TEST(EdgesAt, DegreeSumEqualsEdgeSizes) {
  RandomStream rng(8);
  for (int i = 0; i < 50; ++i) {
    const Hypergraph h = oracle::random_hypergraph(8, 10, 5, rng);
    std::size_t degrees = 0, sizes = 0;
    for (Vertex v : h.vertices()) degrees += edges_at(h, v).size();
    for (std::size_t e = 0; e < h.n_edges(); ++e) sizes += h.edge_size(e);
    EXPECT_EQ(degrees, sizes);
  }
}

TEST(StrongDelete, Path) {
  const Hypergraph h(4, {{a, b}, {b, c}, {c, d}});
  const Hypergraph r = strong_delete(h, b);
  EXPECT_EQ(r.vertices(), (std::vector<Vertex>{a, c, d}));
  EXPECT_EQ(r.edge_family(), (std::vector<Hyperedge>{{c, d}}));
}

TEST(StrongDelete, VertexInEveryEdge) {
  const Hypergraph h(4, {{a, b}, {a, c, d}, {a}});
  EXPECT_EQ(strong_delete(h, a).n_edges(), 0u);
}

TEST(StrongDelete, Commutes) {
  RandomStream rng(13);
  for (int i = 0; i < 100; ++i) {
    const Hypergraph h = oracle::random_hypergraph(6 + rng.uniform_index(5), 12, 4, rng);
    const auto x = static_cast<Vertex>(rng.uniform_index(h.n_vertices()));
    auto y = static_cast<Vertex>(rng.uniform_index(h.n_vertices() - 1));
    if (y >= x) ++y;
    EXPECT_EQ(strong_delete(strong_delete(h, x), y), strong_delete(strong_delete(h, y), x));
  }
}

TEST(StrongDelete, OutOfRange) {
  EXPECT_THROW(strong_delete(Hypergraph(2), 2), std::out_of_range);
}

TEST(Monodegree, StarEqualsGraphDegree) {
  const Hypergraph h(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(monodegree(h, 0), 3u);
}

TEST(Monodegree, OverlappingRemainders) {
  const Hypergraph h(4, {{0, a + 1, b + 1}, {0, b + 1, c + 1}});
  EXPECT_EQ(monodegree(h, 0), 1u);
}

TEST(Monodegree, TwoOfThree) {
  // E(x) = {x,a,b}, {x,c,d}, {x,a,c}
  const Hypergraph h(5, {{0, 1, 2}, {0, 3, 4}, {0, 1, 3}});
  EXPECT_EQ(monodegree(h, 0), 2u);
}

TEST(Monodegree, SingletonCountsForNothing) {
  const Hypergraph h(2, {{0}, {1}});
  EXPECT_EQ(monodegree(h, 0), 0u);
  EXPECT_THROW(monodegree(h, 2), std::out_of_range);
}

TEST(Monodegree, MatchesSubfamilyOracle) {
  RandomStream rng(21);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 4 + rng.uniform_index(9);
    const Hypergraph h = oracle::random_hypergraph(n, 4 + rng.uniform_index(20), 1 + rng.uniform_index(4), rng);
    for (Vertex v : h.vertices()) {
      if (h.incident(v).size() > 14) continue;
      ASSERT_EQ(monodegree(h, v), oracle::monodegree(h, v)) << "instance " << i << " vertex " << v;
    }
  }
}

TEST(SetPacking, RoutesAgree) {
  RandomStream rng(34);
  for (int i = 0; i < 300; ++i) {
    std::vector<VertexSet> sets;
    const std::size_t count = 1 + rng.uniform_index(25);
    const std::size_t universe = 3 + rng.uniform_index(15);
    const std::size_t max_size = 1 + rng.uniform_index(std::min<std::size_t>(4, universe));
    for (std::size_t s = 0; s < count; ++s) {
      VertexSet set;
      const std::size_t size = 1 + rng.uniform_index(max_size);
      while (set.size() < size) {
        const auto v = static_cast<Vertex>(rng.uniform_index(universe));
        if (std::find(set.begin(), set.end(), v) == set.end()) set.push_back(v);
      }
      sets.push_back(set);
    }
    const std::size_t fast = max_disjoint_sets(sets);
    EXPECT_EQ(fast, max_disjoint_sets_search(sets));
    EXPECT_LE(greedy_disjoint_sets(sets), fast);
  }
}

TEST(SetPacking, EmptySetRejected) {
  const std::vector<VertexSet> sets{{1}, {}};
  EXPECT_THROW(max_disjoint_sets(sets), std::invalid_argument);
}

TEST(SetPacking, ReductionsKeepOptimum) {
  const std::vector<VertexSet> sets{{1, 2, 3}, {1}, {4, 5, 6}, {4, 5}, {7, 8, 9}, {9, 10, 11}};
  EXPECT_EQ(max_disjoint_sets(sets), 3u);
  EXPECT_EQ(max_disjoint_sets_search(sets), 3u);
  EXPECT_EQ(detail::drop_supersets(sets).size(), 4u);
}

TEST(MinMonodegree, AllSingletonsPicksZero) {
  const Hypergraph h(4, {{0}, {1}, {2}, {3}});
  EXPECT_EQ(min_monodegree_vertex(h), 0u);
}

TEST(MinMonodegree, IsolatedSingletonBeatsStar) {
  const Hypergraph h(5, {{0, 1}, {0, 2}, {0, 3}, {4}});
  EXPECT_EQ(min_monodegree_vertex(h), 4u);
}

TEST(MinMonodegree, IsArgmin) {
  RandomStream rng(55);
  for (int i = 0; i < 100; ++i) {
    const Hypergraph h = oracle::random_hypergraph(8, 14, 4, rng);
    const Vertex v = min_monodegree_vertex(h);
    for (Vertex u : h.vertices()) EXPECT_LE(monodegree(h, v), monodegree(h, u));
  }
  EXPECT_THROW(min_monodegree_vertex(Hypergraph(0)), std::invalid_argument);
}

TEST(Elimination, SingleEdge) {
  const auto order = smallest_last_order(Hypergraph(2, {{0, 1}}));
  EXPECT_EQ(order.coloring_order, (std::vector<Vertex>{1, 0}));
  EXPECT_EQ(order.min_monodegrees, (std::vector<std::size_t>{0, 1}));
}

TEST(Elimination, AllSingletons) {
  const auto order = smallest_last_order(Hypergraph(4, {{0}, {1}, {2}, {3}}));
  EXPECT_EQ(order.coloring_order, (std::vector<Vertex>{3, 2, 1, 0}));
  EXPECT_EQ(order.max_min_monodegree(), 0u);
}

TEST(Elimination, EachStepIsTheMinimumOfTheRemainingHypergraph) {
  RandomStream rng(89);
  for (int i = 0; i < 60; ++i) {
    Hypergraph h = oracle::random_hypergraph(9, 18, 4, rng);
    const auto order = smallest_last_order(h);
    for (std::size_t step = 0; step < order.coloring_order.size(); ++step) {
      const std::size_t pos = order.coloring_order.size() - 1 - step;
      const Vertex expected = min_monodegree_vertex(h);
      ASSERT_EQ(order.coloring_order[pos], expected);
      ASSERT_EQ(order.min_monodegrees[pos], monodegree(h, expected));
      h = strong_delete(h, expected);
    }
  }
}

TEST(Elimination, MatchesExhaustiveMaxMinMonodegree) {
  RandomStream rng(144);
  for (int i = 0; i < 200; ++i) {
    const Hypergraph h = oracle::random_hypergraph(3 + rng.uniform_index(8), 3 + rng.uniform_index(16), 4, rng);
    ASSERT_EQ(max_min_monodegree(h), oracle::max_min_monodegree(h)) << "instance " << i;
  }
}

TEST(Elimination, CompleteGraph) {
  Hypergraph h(5);
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex v = u + 1; v < 5; ++v) h.add_edge({u, v});
  }
  EXPECT_EQ(max_min_monodegree(h), 4u);
}

TEST(Fixture, RoundTripWithAnnotations) {
  const Hypergraph h(5, {{0, 1, 2}, {3}, {1, 4}});
  std::stringstream io;
  write_hypergraph(io, h, [](std::size_t i) { return "edge" + std::to_string(i); });
  EXPECT_EQ(read_hypergraph(io), h);
}

TEST(Fixture, MalformedInput) {
  std::istringstream bad_header("x y\n");
  EXPECT_THROW(read_hypergraph(bad_header), std::invalid_argument);
  std::istringstream short_family("3 2\n0 1\n");
  EXPECT_THROW(read_hypergraph(short_family), std::invalid_argument);
  std::istringstream out_of_range("3 1\n0 7\n");
  EXPECT_THROW(read_hypergraph(out_of_range), std::invalid_argument);
}
