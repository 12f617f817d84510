#pragma once

#include <cstdint>

#include "flowfilter/graph.hpp"
#include "flowfilter/tree_dp.hpp"

namespace flowfilter {

enum class NodeCountModel {
  kFixed,    // exactly levels × expected_width nodes
  kPoisson,  // Poisson(levels × expected_width) nodes
};

struct LayeredConfig {
  int levels = 10;
  int expected_width = 100;
  double x = 1.0;
  double y = 4.0;
  std::uint64_t seed = 0;
  NodeCountModel node_count = NodeCountModel::kPoisson;
};

// Edge probability between levels i < j: min(1, x / y^(j − i)).
double layered_edge_probability(const LayeredConfig& cfg, int distance);

/*
  Layered random DAG. Every non-source node gets a uniform random level in
  1..levels; every pair of nodes in levels i < j is joined (lower level to
  higher) independently with layered_edge_probability. A source "s" feeds
  every level-1 node. Node labels are n1..nN in creation order.
  Throws Errc::kInvalidArgument for levels < 2, width < 1, x <= 0 or y <= 0.
*/
CGraph layered_graph(const LayeredConfig& cfg);

// Random DAG on n nodes: a random permutation fixes the order and each
// forward pair is an edge with probability edge_prob. Multiple in-degree-0
// nodes get a super-source.
CGraph random_dag(std::size_t n, double edge_prob, std::uint64_t seed);

// Uniform random recursive tree t0..t{n-1} under a source "s". t0 is always
// fed by the source; every other node is with probability source_edge_prob.
CTree random_ctree(std::size_t n, double source_edge_prob, std::uint64_t seed);

}  // namespace flowfilter
