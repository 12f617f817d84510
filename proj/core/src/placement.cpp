#include "flowfilter/placement.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "flowfilter/path_stats.hpp"
#include "flowfilter/tree_dp.hpp"

namespace flowfilter {

namespace {

constexpr std::array kAlgorithms = {
    Algorithm::kGreedy1,          Algorithm::kGreedyAll, Algorithm::kGreedyMax,
    Algorithm::kGreedyL,          Algorithm::kTreeDp,    Algorithm::kOptimalUnbounded,
    Algorithm::kRandK,            Algorithm::kRandI,     Algorithm::kRandW,
};

FilterSet make_set(std::string_view algorithm, std::size_t k) {
  FilterSet f;
  f.algorithm = std::string(algorithm);
  f.k_requested = k;
  return f;
}

// Stable top-k: larger score first, ascending index among ties.
template <typename Score>
std::vector<NodeIndex> top_k(const std::vector<NodeIndex>& candidates,
                             const std::vector<Score>& score, std::size_t k) {
  std::vector<NodeIndex> ranked = candidates;
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](NodeIndex a, NodeIndex b) { return score[a] > score[b]; });
  ranked.resize(std::min(k, ranked.size()));
  return ranked;
}

}  // namespace

std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::kGreedy1: return "greedy-1";
    case Algorithm::kGreedyAll: return "greedy-all";
    case Algorithm::kGreedyMax: return "greedy-max";
    case Algorithm::kGreedyL: return "greedy-l";
    case Algorithm::kTreeDp: return "tree-dp";
    case Algorithm::kOptimalUnbounded: return "optimal-unbounded";
    case Algorithm::kRandK: return "rand-k";
    case Algorithm::kRandI: return "rand-i";
    case Algorithm::kRandW: return "rand-w";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : kAlgorithms) {
    if (to_string(a) == name) return a;
  }
  throw Error(Errc::kInvalidArgument, "unknown algorithm '" + std::string(name) + "'");
}

bool is_randomized(Algorithm a) noexcept {
  return a == Algorithm::kRandK || a == Algorithm::kRandI || a == Algorithm::kRandW;
}

std::span<const Algorithm> all_algorithms() noexcept { return kAlgorithms; }

std::vector<NodeIndex> eligible_nodes(const CGraph& g) {
  std::vector<NodeIndex> out;
  out.reserve(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    if (!g.is_source(v)) out.push_back(v);
  }
  return out;
}

FilterSet greedy_1(const CGraph& g, std::size_t k) {
  std::vector<std::uint64_t> m(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    m[v] = static_cast<std::uint64_t>(g.in_degree(v)) * g.out_degree(v);
  }
  FilterSet f = make_set(to_string(Algorithm::kGreedy1), k);
  f.members = top_k(eligible_nodes(g), m, k);
  return f;
}

FilterSet greedy_all(const CGraph& g, std::size_t k) {
  FilterSet f = make_set(to_string(Algorithm::kGreedyAll), k);
  const auto eligible = eligible_nodes(g);
  topological_order(g);  // reject cycles even when k == 0
  for (std::size_t round = 0; round < k; ++round) {
    const std::vector<Count> impacts = impact_table(g, f);
    std::optional<NodeIndex> best;
    for (NodeIndex v : eligible) {
      if (impacts[v] > 0 && (!best || impacts[v] > impacts[*best])) best = v;
    }
    if (!best) break;
    f.members.push_back(*best);
  }
  return f;
}

FilterSet greedy_max(const CGraph& g, std::size_t k) {
  FilterSet f = make_set(to_string(Algorithm::kGreedyMax), k);
  const std::vector<Count> impacts = impact_table(g, FilterSet{});
  f.members = top_k(eligible_nodes(g), impacts, k);
  return f;
}

FilterSet greedy_l(const CGraph& g, std::size_t k) {
  FilterSet f = make_set(to_string(Algorithm::kGreedyL), k);
  const auto eligible = eligible_nodes(g);
  topological_order(g);
  std::vector<std::uint8_t> chosen(g.node_count(), 0);
  for (std::size_t round = 0; round < k && f.size() < eligible.size(); ++round) {
    const std::vector<Count> prefix = compute_prefix(g, f);
    std::optional<NodeIndex> best;
    Count best_score = 0;
    for (NodeIndex v : eligible) {
      if (chosen[v]) continue;
      Count score = prefix[v] * g.out_degree(v);
      if (!best || score > best_score) {
        best = v;
        best_score = std::move(score);
      }
    }
    chosen[*best] = 1;
    f.members.push_back(*best);
  }
  return f;
}

FilterSet optimal_unbounded(const CGraph& g) {
  FilterSet f = make_set(to_string(Algorithm::kOptimalUnbounded), 0);
  for (NodeIndex v : eligible_nodes(g)) {
    if (g.in_degree(v) > 1 && g.out_degree(v) > 0) f.members.push_back(v);
  }
  f.k_requested = f.members.size();
  return f;
}

double random_weight(const CGraph& g, NodeIndex v) {
  double w = 0.0;
  for (NodeIndex u : g.out(v)) w += 1.0 / static_cast<double>(g.in_degree(u));
  return w;
}

FilterSet randomized_baseline(const CGraph& g, std::size_t k, RandomVariant variant,
                              std::uint64_t seed) {
  const Algorithm algo = variant == RandomVariant::kRandK   ? Algorithm::kRandK
                         : variant == RandomVariant::kRandI ? Algorithm::kRandI
                                                            : Algorithm::kRandW;
  FilterSet f = make_set(to_string(algo), k);
  f.seed = seed;
  std::vector<NodeIndex> eligible = eligible_nodes(g);
  const std::size_t n = eligible.size();
  std::mt19937_64 rng(seed);

  if (variant == RandomVariant::kRandK) {
    if (k > n) {
      throw Error(Errc::kInvalidArgument, "rand-k needs k <= " + std::to_string(n) +
                                              " eligible nodes, got " + std::to_string(k));
    }
    // Partial Fisher-Yates.
    for (std::size_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, n - 1);
      std::swap(eligible[i], eligible[pick(rng)]);
      f.members.push_back(eligible[i]);
    }
    return f;
  }

  if (n == 0) return f;
  const double base = static_cast<double>(k) / static_cast<double>(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (NodeIndex v : eligible) {
    double p = variant == RandomVariant::kRandI ? base : random_weight(g, v) * base;
    p = std::clamp(p, 0.0, 1.0);
    // Always draw so the stream position does not depend on p.
    const double u = coin(rng);
    if (u < p) f.members.push_back(v);
  }
  return f;
}

FilterSet place(const CGraph& g, Algorithm algorithm, std::size_t k,
                std::optional<std::uint64_t> seed) {
  auto need_seed = [&]() {
    if (!seed) throw Error(Errc::kInvalidArgument, "randomized algorithms need a seed");
    return *seed;
  };
  switch (algorithm) {
    case Algorithm::kGreedy1: return greedy_1(g, k);
    case Algorithm::kGreedyAll: return greedy_all(g, k);
    case Algorithm::kGreedyMax: return greedy_max(g, k);
    case Algorithm::kGreedyL: return greedy_l(g, k);
    case Algorithm::kTreeDp: return tree_dp(certify_ctree(g), k);
    case Algorithm::kOptimalUnbounded: return optimal_unbounded(g);
    case Algorithm::kRandK: return randomized_baseline(g, k, RandomVariant::kRandK, need_seed());
    case Algorithm::kRandI: return randomized_baseline(g, k, RandomVariant::kRandI, need_seed());
    case Algorithm::kRandW: return randomized_baseline(g, k, RandomVariant::kRandW, need_seed());
  }
  throw Error(Errc::kInvalidArgument, "unknown algorithm");
}

}  // namespace flowfilter
