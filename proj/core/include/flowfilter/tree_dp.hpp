#pragma once

#include <optional>
#include <span>
#include <vector>

#include "flowfilter/count.hpp"
#include "flowfilter/filter_set.hpp"
#include "flowfilter/graph.hpp"

namespace flowfilter {

/*
  A c-graph that becomes a forest of out-trees once its single source is
  removed: every other node has at most one non-source parent. Nodes may also
  hear from the source directly (has_source_edge).
*/
class CTree {
 public:
  const CGraph& graph() const noexcept { return graph_; }
  NodeIndex source() const noexcept { return source_; }
  std::optional<NodeIndex> tree_parent(NodeIndex v) const;
  bool has_source_edge(NodeIndex v) const { return source_edge_.at(v) != 0; }
  // Tree children in ascending index.
  std::span<const NodeIndex> children(NodeIndex v) const { return children_.at(v); }
  // Non-source nodes without a tree parent, ascending index.
  std::span<const NodeIndex> roots() const noexcept { return roots_; }

 private:
  friend CTree certify_ctree(const CGraph& g);

  CGraph graph_;
  NodeIndex source_ = 0;
  std::vector<std::optional<NodeIndex>> parent_;
  std::vector<std::uint8_t> source_edge_;
  std::vector<std::vector<NodeIndex>> children_;
  std::vector<NodeIndex> roots_;
};

// Throws Errc::kNotACTree (or the single-source errors).
CTree certify_ctree(const CGraph& g);

struct TreeDpSolution {
  FilterSet filters;
  Count value;  // F(filters), read off the DP table
};

/*
  Exact optimum over filter sets of size <= k on a c-tree. The tree is
  binarized (a node with more than two children keeps its first child on the
  left and hands the rest to a chain of dummy nodes on the right) and the
  table is indexed by (node, budget, inflow), where inflow is the number of
  copies arriving from the tree parent. Dummy nodes receive nothing, pass the
  inflow through unchanged and are never filters.
*/
TreeDpSolution solve_tree_dp(const CTree& t, std::size_t k);

FilterSet tree_dp(const CTree& t, std::size_t k);

}  // namespace flowfilter
