#include <gtest/gtest.h>

#include <cmath>

#include "flowfilter/harness.hpp"
#include "flowfilter/path_stats.hpp"
#include "flowfilter/synth.hpp"
#include "oracles.hpp"

namespace flowfilter {
namespace {

TEST(LayeredGraph, AlwaysAcyclicWithOneSource) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    LayeredConfig cfg{.levels = 5, .expected_width = 20, .x = 3, .y = 4, .seed = seed};
    CGraph g = layered_graph(cfg);
    EXPECT_FALSE(testing::has_cycle(g));
    EXPECT_EQ(g.label(g.single_source()), "s");
  }
}

TEST(LayeredGraph, FixedNodeCount) {
  LayeredConfig cfg{.levels = 4, .expected_width = 25, .seed = 3,
                    .node_count = NodeCountModel::kFixed};
  EXPECT_EQ(layered_graph(cfg).node_count(), 101u);
}

TEST(LayeredGraph, DegenerateTwoLevelConfig) {
  // Two nodes with probability-1 edges: every split of levels is covered.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    LayeredConfig cfg{.levels = 2, .expected_width = 1, .x = 1, .y = 1, .seed = seed,
                      .node_count = NodeCountModel::kFixed};
    CGraph g = layered_graph(cfg);
    ASSERT_EQ(g.node_count(), 3u);
    const auto s = g.single_source();
    const std::size_t fed = g.out_degree(s);
    const std::size_t cross = g.edge_count() - fed;
    if (fed == 1) {
      EXPECT_EQ(cross, 1u);  // one node per level
    } else {
      EXPECT_EQ(cross, 0u);  // both on the same level
    }
  }
}

TEST(LayeredGraph, Reproducible) {
  LayeredConfig cfg{.levels = 6, .expected_width = 30, .seed = 12};
  EXPECT_EQ(serialize_edge_list(layered_graph(cfg)), serialize_edge_list(layered_graph(cfg)));
  cfg.seed = 13;
  LayeredConfig other = cfg;
  other.seed = 14;
  EXPECT_NE(serialize_edge_list(layered_graph(cfg)), serialize_edge_list(layered_graph(other)));
}

TEST(LayeredGraph, InvalidConfig) {
  EXPECT_THROW(layered_graph({.levels = 1}), Error);
  EXPECT_THROW(layered_graph({.expected_width = 0}), Error);
  EXPECT_THROW(layered_graph({.x = 0}), Error);
}

TEST(LayeredGraph, EdgeProbabilityIsClamped) {
  LayeredConfig cfg{.x = 10, .y = 2};
  EXPECT_DOUBLE_EQ(layered_edge_probability(cfg, 1), 1.0);
  EXPECT_DOUBLE_EQ(layered_edge_probability(cfg, 4), 10.0 / 16.0);
}

TEST(LayeredGraph, SmallConfigMeanMatchesMoments) {
  for (NodeCountModel model : {NodeCountModel::kFixed, NodeCountModel::kPoisson}) {
    const int levels = 4, width = 15;
    const double x = 2, y = 3;
    auto m = model == NodeCountModel::kFixed
                 ? testing::layered_edge_moments_fixed(levels, width, x, y)
                 : testing::layered_edge_moments_poisson(levels, width, x, y);
    const int runs = 300;
    double sum = 0, sum2 = 0;
    for (int r = 0; r < runs; ++r) {
      LayeredConfig cfg{levels, width, x, y, static_cast<std::uint64_t>(r), model};
      const double e = static_cast<double>(layered_graph(cfg).edge_count());
      sum += e;
      sum2 += e * e;
    }
    const double mean = sum / runs;
    const double sd = std::sqrt(sum2 / runs - mean * mean);
    EXPECT_NEAR(mean, m.mean, 4 * m.stddev / std::sqrt(runs));
    EXPECT_NEAR(sd, m.stddev, 0.2 * m.stddev);
  }
}

TEST(LayeredGraph, DefaultConfigsWithinThreeSigma) {
  for (double x : {1.0, 3.0}) {
    auto m = testing::layered_edge_moments_poisson(10, 100, x, 4);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      LayeredConfig cfg{.x = x, .y = 4, .seed = seed};
      const double e = static_cast<double>(layered_graph(cfg).edge_count());
      EXPECT_NEAR(e, m.mean, 3 * m.stddev) << "x=" << x << " seed=" << seed;
    }
  }
}

TEST(RandomDag, EmptyEdgeSetIsAStar) {
  CGraph g = random_dag(5, 0.0, 1);
  EXPECT_EQ(g.node_count(), 6u);
  EXPECT_EQ(g.out_degree(g.single_source()), 5u);
  EXPECT_EQ(max_objective(g), 0);
}

TEST(RandomDag, CompleteDagPrefix) {
  CGraph g = random_dag(5, 1.0, 2);
  EXPECT_EQ(g.node_count(), 5u);
  PathStats st = compute_stats(g, {});
  TopoOrder order = topological_order(g);
  const NodeIndex last = order.back();
  EXPECT_EQ(st.prefix[last], 8);  // 2^(n-2)
  EXPECT_EQ(st.prefix[last], testing::enumerate_paths(g, g.single_source(), last));
}

TEST(RandomDag, Reproducible) {
  EXPECT_EQ(serialize_edge_list(random_dag(15, 0.3, 4)),
            serialize_edge_list(random_dag(15, 0.3, 4)));
}

TEST(RandomCTree, SingleNode) {
  CTree t = random_ctree(1, 0.5, 0);
  EXPECT_EQ(t.graph().node_count(), 2u);
  EXPECT_EQ(t.roots().size(), 1u);
  EXPECT_TRUE(t.has_source_edge(t.roots()[0]));
}

TEST(RandomCTree, NoExtraSourceEdges) {
  CTree t = random_ctree(12, 0.0, 5);
  for (NodeIndex v = 0; v < t.graph().node_count(); ++v) {
    if (v != t.source()) EXPECT_EQ(t.graph().in_degree(v), 1u);
  }
  EXPECT_EQ(max_objective(t.graph()), 0);
}

TEST(RandomCTree, Reproducible) {
  EXPECT_EQ(serialize_edge_list(random_ctree(20, 0.3, 9).graph()),
            serialize_edge_list(random_ctree(20, 0.3, 9).graph()));
}

}  // namespace
}  // namespace flowfilter
