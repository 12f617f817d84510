#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "flowfilter/filter_set.hpp"
#include "flowfilter/graph.hpp"

namespace flowfilter {

enum class Algorithm {
  kGreedy1,
  kGreedyAll,
  kGreedyMax,
  kGreedyL,
  kTreeDp,
  kOptimalUnbounded,
  kRandK,
  kRandI,
  kRandW,
};

enum class RandomVariant { kRandK, kRandI, kRandW };

std::string_view to_string(Algorithm a) noexcept;
// Accepts the CLI spellings ("greedy-all", "rand-k", ...). Throws kInvalidArgument.
Algorithm parse_algorithm(std::string_view name);
bool is_randomized(Algorithm a) noexcept;
std::span<const Algorithm> all_algorithms() noexcept;

// Nodes that may hold a filter: every non-source node, ascending index.
std::vector<NodeIndex> eligible_nodes(const CGraph& g);

// Top k eligible nodes by in-degree × out-degree.
FilterSet greedy_1(const CGraph& g, std::size_t k);

// k rounds of "add the node of largest impact under the current filters",
// impacts recomputed from scratch each round. Stops once no node has
// positive impact.
FilterSet greedy_all(const CGraph& g, std::size_t k);

// Top k nodes of the impact table computed once with no filters.
FilterSet greedy_max(const CGraph& g, std::size_t k);

// k rounds of "add the node maximizing prefix × out-degree", prefixes
// recomputed under the current filters each round.
FilterSet greedy_l(const CGraph& g, std::size_t k);

// {v | in-degree(v) > 1 and out-degree(v) > 0}, the smallest set achieving F(V).
FilterSet optimal_unbounded(const CGraph& g);

// Σ over children u of 1 / in-degree(u).
double random_weight(const CGraph& g, NodeIndex v);

// rand-k: k distinct eligible nodes uniformly (k must not exceed the number
// of eligible nodes). rand-i: each eligible node independently with
// probability k/n. rand-w: probability clamp(random_weight(v)·k/n, 0, 1).
// n is the number of eligible nodes.
FilterSet randomized_baseline(const CGraph& g, std::size_t k, RandomVariant variant,
                              std::uint64_t seed);

// Dispatches to the algorithm. `seed` is required for randomized variants;
// tree-dp certifies the graph as a c-tree first.
FilterSet place(const CGraph& g, Algorithm algorithm, std::size_t k,
                std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace flowfilter
