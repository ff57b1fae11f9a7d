#include <cmath>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "gain_fixtures.hpp"
#include "hyperalloc/hyperalloc.hpp"
#include "oracles.hpp"

using namespace hyperalloc;
using fixture::quiet_gains;
using fixture::unit_power_config;

namespace {

InterferenceHypergraph wrap(const Hypergraph& base) {
  InterferenceHypergraph h;
  h.layout = {0, base.vertex_bound()};
  h.base = base;
  for (std::size_t i = 0; i < base.n_edges(); ++i) {
    h.kinds.push_back(base.edge_size(i) == 1 ? EdgeKind::kSingleton : EdgeKind::kCumulative);
    h.victims.emplace_back();
  }
  return h;
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

// Interference 21 dB below the wanted signal.
const double kTwentyOneDbDown = std::pow(10.0, -2.1);

}  // namespace

TEST(BuildHypergraph, TwoSubThresholdInterferersAtD2dReceiver) {
  const SimConfig c = unit_power_config(0, 3);
  LinkGains g = quiet_gains(0, 3);
  g.d2dtx_to_d2drx(1, 0) = kTwentyOneDbDown;
  g.d2dtx_to_d2drx(2, 0) = kTwentyOneDbDown;
  EXPECT_NEAR(10.0 * std::log10(1.0 / (2.0 * kTwentyOneDbDown)), 17.99, 0.01);

  const InterferenceHypergraph h = build_hypergraph(g, c);
  EXPECT_EQ(h.count(EdgeKind::kIndependentPair), 0u);
  ASSERT_EQ(h.count(EdgeKind::kCumulative), 1u);
  EXPECT_EQ(h.base.edge_family()[0], (Hyperedge{0, 1, 2}));
  EXPECT_EQ(h.victims[0], std::optional<Vertex>{0});
  EXPECT_EQ(h.count(EdgeKind::kSingleton), 0u);
}

TEST(BuildHypergraph, TwoSubThresholdInterferersAtEnb) {
  const SimConfig c = unit_power_config(1, 2);
  LinkGains g = quiet_gains(1, 2);
  g.d2dtx_to_enb[0] = kTwentyOneDbDown;
  g.d2dtx_to_enb[1] = kTwentyOneDbDown;
  const InterferenceHypergraph h = build_hypergraph(g, c);
  ASSERT_EQ(h.count(EdgeKind::kCumulative), 1u);
  EXPECT_EQ(h.base.edge_family()[0], (Hyperedge{0, 1, 2}));
}

TEST(BuildHypergraph, OneInterfererAloneIsNotEnough) {
  const SimConfig c = unit_power_config(0, 3);
  LinkGains g = quiet_gains(0, 3);
  g.d2dtx_to_d2drx(1, 0) = kTwentyOneDbDown;
  const InterferenceHypergraph h = build_hypergraph(g, c);
  EXPECT_EQ(h.count(EdgeKind::kCumulative), 0u);
  EXPECT_EQ(h.count(EdgeKind::kSingleton), 3u);
}

TEST(BuildHypergraph, IndependentInterfererExcludedFromCumulativeSets) {
  const SimConfig c = unit_power_config(0, 3);
  LinkGains g = quiet_gains(0, 3);
  g.d2dtx_to_d2drx(1, 0) = 0.5;  // pairwise edge {0, 1}
  g.d2dtx_to_d2drx(2, 0) = kTwentyOneDbDown;
  const InterferenceHypergraph h = build_hypergraph(g, c);
  EXPECT_EQ(h.count(EdgeKind::kIndependentPair), 1u);
  EXPECT_EQ(h.count(EdgeKind::kCumulative), 0u);
}

TEST(BuildHypergraph, TwoCellularNoD2d) {
  const SimConfig c = unit_power_config(2, 0);
  const InterferenceHypergraph h = build_hypergraph(LinkGains(2, 0), c);
  EXPECT_EQ(h.count(EdgeKind::kIndependentPair), 1u);
  EXPECT_EQ(h.count(EdgeKind::kCumulative), 0u);
  EXPECT_EQ(h.count(EdgeKind::kSingleton), 0u);
}

TEST(BuildHypergraph, UncoveredVerticesGetOneSingletonEach) {
  const SimConfig c = unit_power_config(1, 2);
  const InterferenceHypergraph h = build_hypergraph(quiet_gains(1, 2), c);
  EXPECT_EQ(h.count(EdgeKind::kSingleton), 3u);
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(h.base.incident(v).size(), 1u);
}

TEST(BuildHypergraph, StructuralInvariantsOnRandomDrops) {
  for (std::size_t q : {1, 2, 3}) {
    SimConfig c;
    c.n_cellular = 6;
    c.n_d2d_pairs = 8;
    c.q_cumulative = q;
    for (std::uint64_t t = 0; t < 15; ++t) {
      const LinkGains gains = trial_gains(c, t);
      const InterferenceHypergraph h = build_hypergraph(gains, c);
      const ConflictGraph g = build_graph(gains, c);
      ASSERT_EQ(h.kinds.size(), h.base.n_edges());
      ASSERT_EQ(h.victims.size(), h.base.n_edges());
      EXPECT_TRUE(h.base.covers_all_vertices());
      EXPECT_EQ(h.count(EdgeKind::kIndependentPair), g.n_edges());
      const std::size_t n = c.n_vertices();
      EXPECT_LE(static_cast<double>(h.count(EdgeKind::kCumulative)), n * binomial(n - 1, q));
      for (std::size_t i = 0; i < h.base.n_edges(); ++i) {
        const auto e = h.base.edge(i);
        switch (h.kinds[i]) {
          case EdgeKind::kIndependentPair:
            ASSERT_EQ(e.size(), 2u);
            EXPECT_TRUE(g.has_edge(e[0], e[1]));
            break;
          case EdgeKind::kCumulative: {
            ASSERT_EQ(e.size(), q + 1);
            const Vertex victim = *h.victims[i];
            for (Vertex u : e) {
              if (u != victim) {
                EXPECT_FALSE(g.has_edge(victim, u));
              }
            }
            if (victim < c.n_cellular) {
              for (Vertex u : e) EXPECT_TRUE(u == victim || u >= c.n_cellular);
            }
            break;
          }
          case EdgeKind::kSingleton:
            EXPECT_EQ(e.size(), 1u);
            break;
        }
      }
    }
  }
}

TEST(BuildHypergraph, RaisingEtaNeverRemovesEdges) {
  SimConfig low;
  low.n_cellular = 6;
  low.n_d2d_pairs = 8;
  low.eta_c_db = low.eta_d_db = 15.0;
  SimConfig high = low;
  high.eta_c_db = high.eta_d_db = 25.0;
  for (std::uint64_t t = 0; t < 20; ++t) {
    const LinkGains gains = trial_gains(low, t);
    const InterferenceHypergraph a = build_hypergraph(gains, low);
    const InterferenceHypergraph b = build_hypergraph(gains, high);
    for (std::size_t i = 0; i < a.base.n_edges(); ++i) {
      if (a.kinds[i] == EdgeKind::kSingleton) continue;
      auto e = a.base.edge(i);
      EXPECT_TRUE(b.base.find_edge(Hyperedge(e.begin(), e.end())).has_value());
    }
    EXPECT_GE(b.count(EdgeKind::kCumulative), a.count(EdgeKind::kCumulative));
  }
}

TEST(BuildHypergraph, AddingACellularUeRaisesMaxMinMonodegreeByAtMostOne) {
  // The smaller instance keeps every gain of the larger one except the last
  // cellular UE's, so its hypergraph is the larger one with that UE deleted.
  SimConfig c;
  c.n_cellular = 4;
  c.n_d2d_pairs = 5;
  for (std::uint64_t t = 0; t < 40; ++t) {
    const LinkGains big = trial_gains(c, t);
    LinkGains small(3, 5);
    for (std::size_t n = 0; n < 3; ++n) {
      small.cellular_to_enb[n] = big.cellular_to_enb[n];
      for (std::size_t m = 0; m < 5; ++m) small.cellular_to_d2drx(n, m) = big.cellular_to_d2drx(n, m);
    }
    small.d2d_pair = big.d2d_pair;
    small.d2dtx_to_enb = big.d2dtx_to_enb;
    small.d2dtx_to_d2drx = big.d2dtx_to_d2drx;
    SimConfig cs = c;
    cs.n_cellular = 3;
    const std::size_t m_small = max_min_monodegree(build_hypergraph(small, cs).base);
    const std::size_t m_big = max_min_monodegree(build_hypergraph(big, c).base);
    EXPECT_LE(m_small, m_big);
    EXPECT_LE(m_big, m_small + 1);
  }
}

TEST(BuildHypergraph, AnnotatedDump) {
  const SimConfig c = unit_power_config(2, 1);
  const InterferenceHypergraph h = build_hypergraph(quiet_gains(2, 1), c);
  std::ostringstream out;
  write_interference_hypergraph(out, h);
  EXPECT_EQ(out.str(), "3 2\n0 1 # independent\n2 # singleton\n");
}

TEST(OrderMinMonodegree, SingleTwoEdge) {
  const auto order = order_min_monodegree(wrap(Hypergraph(2, {{0, 1}})));
  EXPECT_EQ(order.coloring_order, (std::vector<Vertex>{1, 0}));
  EXPECT_EQ(order.min_monodegrees.back(), 1u);
}

TEST(OrderMinMonodegree, AllSingletons) {
  const auto order = order_min_monodegree(wrap(Hypergraph(4, {{0}, {1}, {2}, {3}})));
  EXPECT_EQ(order.coloring_order, (std::vector<Vertex>{3, 2, 1, 0}));
}

TEST(ColorHypergraph, ThreeEdgeOneColor) {
  const InterferenceHypergraph h = wrap(Hypergraph(3, {{0, 1, 2}}));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RandomStream rng(seed);
    const Allocation a = color_hypergraph(h, 1, rng);
    EXPECT_EQ(a.n_allocated(), 2u);
    EXPECT_EQ(oracle::monochromatic_edges(h.base, a), 0u);
  }
}

TEST(ColorHypergraph, TwoEdgeTwoColors) {
  const InterferenceHypergraph h = wrap(Hypergraph(2, {{0, 1}}));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RandomStream rng(seed);
    const Allocation a = color_hypergraph(h, 2, rng);
    ASSERT_EQ(a.n_allocated(), 2u);
    EXPECT_NE(a.channel(0), a.channel(1));
  }
}

TEST(ColorHypergraph, SingletonsImposeNothing) {
  const InterferenceHypergraph h = wrap(Hypergraph(3, {{0}, {1}, {2}}));
  RandomStream rng(1);
  EXPECT_EQ(color_hypergraph(h, 1, rng).n_allocated(), 3u);
}

TEST(ColorHypergraph, StrictRuleForbidsAnySharedColor) {
  const InterferenceHypergraph h = wrap(Hypergraph(3, {{0, 1, 2}}));
  RandomStream rng(4);
  const Allocation a = color_hypergraph(h, 3, rng, ColorChoice::kRandom, HyperedgeRule::kStrict);
  ASSERT_EQ(a.n_allocated(), 3u);
  EXPECT_EQ(std::set<std::optional<Channel>>({a.channel(0), a.channel(1), a.channel(2)}).size(), 3u);
  RandomStream one(4);
  EXPECT_EQ(color_hypergraph(h, 1, one, ColorChoice::kRandom, HyperedgeRule::kStrict).n_allocated(), 1u);
}

TEST(ColorHypergraph, MaxMinMonodegreePlusOneColorsSuffice) {
  RandomStream gen(77);
  for (int i = 0; i < 300; ++i) {
    const Hypergraph base = oracle::random_hypergraph(4 + gen.uniform_index(12), 4 + gen.uniform_index(30), 4, gen);
    const InterferenceHypergraph h = wrap(base);
    const auto order = order_min_monodegree(h);
    RandomStream rng(i);
    const Allocation a = color_hypergraph(h, order.coloring_order, order.max_min_monodegree() + 1, rng);
    EXPECT_EQ(a.n_allocated(), base.n_vertices());
    EXPECT_EQ(oracle::monochromatic_edges(base, a), 0u);
  }
}

TEST(ColorHypergraph, ZeroColorsRejected) {
  RandomStream rng(1);
  EXPECT_THROW(color_hypergraph(wrap(Hypergraph(1, {{0}})), 0, rng), std::invalid_argument);
}

TEST(Allocate, Empty) {
  SimConfig c = unit_power_config(0, 0);
  RandomStream rng(1);
  EXPECT_EQ(allocate_hypergraph(LinkGains(0, 0), c, rng).size(), 0u);
}

TEST(Allocate, SingleCellular) {
  SimConfig c = unit_power_config(1, 0);
  RandomStream rng(1);
  EXPECT_EQ(allocate_hypergraph(LinkGains(1, 0), c, rng).channel(0), Channel{0});
}

TEST(Allocate, OutputAlwaysValid) {
  SimConfig c;
  c.n_cellular = 8;
  c.n_d2d_pairs = 12;
  c.n_channels = 5;
  for (std::uint64_t t = 0; t < 30; ++t) {
    const LinkGains gains = trial_gains(c, t);
    RandomStream rng(t);
    const Allocation a = allocate_hypergraph(gains, c, rng);
    EXPECT_FALSE(validate(a, c).has_value());
    EXPECT_EQ(oracle::monochromatic_edges(build_hypergraph(gains, c).base, a), 0u);
  }
}

TEST(Ops, CumulativeTestsAreCounted) {
  // Quiet D2D-only instance: 3 pairwise D-D pairs tested twice each, and each
  // of 3 victims tests C(2, 2) = 1 interferer pair.
  const SimConfig c = unit_power_config(0, 3);
  OpCounter ops;
  build_hypergraph(quiet_gains(0, 3), c, &ops);
  EXPECT_EQ(ops.comparisons, 6u + 3u);
  EXPECT_EQ(ops.edge_ops, 3u);  // three singletons
}
