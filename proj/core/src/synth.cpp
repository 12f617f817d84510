#include "flowfilter/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace flowfilter {

double layered_edge_probability(const LayeredConfig& cfg, int distance) {
  return std::clamp(cfg.x / std::pow(cfg.y, distance), 0.0, 1.0);
}

CGraph layered_graph(const LayeredConfig& cfg) {
  if (cfg.levels < 2) throw Error(Errc::kInvalidArgument, "layered graph needs at least 2 levels");
  if (cfg.expected_width < 1) throw Error(Errc::kInvalidArgument, "level width must be positive");
  if (!(cfg.x > 0) || !(cfg.y > 0)) throw Error(Errc::kInvalidArgument, "x and y must be positive");

  std::mt19937_64 rng(cfg.seed);
  const auto mean_nodes = static_cast<std::int64_t>(cfg.levels) * cfg.expected_width;
  std::int64_t n = mean_nodes;
  if (cfg.node_count == NodeCountModel::kPoisson) {
    n = std::poisson_distribution<std::int64_t>(static_cast<double>(mean_nodes))(rng);
  }

  std::uniform_int_distribution<int> pick_level(1, cfg.levels);
  std::vector<int> level(static_cast<std::size_t>(n));
  for (auto& l : level) l = pick_level(rng);

  std::vector<std::string> labels;
  labels.reserve(level.size() + 1);
  labels.emplace_back("s");
  for (std::size_t i = 0; i < level.size(); ++i) labels.push_back("n" + std::to_string(i + 1));

  std::vector<double> prob(static_cast<std::size_t>(cfg.levels), 0.0);
  for (int d = 1; d < cfg.levels; ++d) prob[static_cast<std::size_t>(d)] = layered_edge_probability(cfg, d);

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < level.size(); ++i) {
    if (level[i] == 1) edges.push_back({0, static_cast<NodeIndex>(i + 1)});
  }
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t u = 0; u < level.size(); ++u) {
    for (std::size_t v = 0; v < level.size(); ++v) {
      if (level[v] <= level[u]) continue;
      if (coin(rng) < prob[static_cast<std::size_t>(level[v] - level[u])]) {
        edges.push_back({static_cast<NodeIndex>(u + 1), static_cast<NodeIndex>(v + 1)});
      }
    }
  }
  return CGraph::build(std::move(labels), std::move(edges), std::vector<NodeIndex>{0});
}

CGraph random_dag(std::size_t n, double edge_prob, std::uint64_t seed) {
  if (n == 0) throw Error(Errc::kInvalidArgument, "random_dag needs n >= 1");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw Error(Errc::kInvalidArgument, "edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<NodeIndex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(edge_prob);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({order[i], order[j]});
    }
  }
  return add_super_source(CGraph::build(std::move(labels), std::move(edges)));
}

CTree random_ctree(std::size_t n, double source_edge_prob, std::uint64_t seed) {
  if (n == 0) throw Error(Errc::kInvalidArgument, "random_ctree needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::string> labels{"s"};
  for (std::size_t i = 0; i < n; ++i) labels.push_back("t" + std::to_string(i));
  std::vector<Edge> edges{{0, 1}};
  std::bernoulli_distribution fed(std::clamp(source_edge_prob, 0.0, 1.0));
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    edges.push_back({static_cast<NodeIndex>(parent(rng) + 1), static_cast<NodeIndex>(i + 1)});
    if (fed(rng)) edges.push_back({0, static_cast<NodeIndex>(i + 1)});
  }
  return certify_ctree(
      CGraph::build(std::move(labels), std::move(edges), std::vector<NodeIndex>{0}));
}

}  // namespace flowfilter
