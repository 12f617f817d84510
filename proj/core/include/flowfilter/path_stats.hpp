#pragma once

#include <vector>

#include "flowfilter/count.hpp"
#include "flowfilter/filter_set.hpp"
#include "flowfilter/graph.hpp"

namespace flowfilter {

struct PlistEntry {
  NodeIndex ancestor;
  Count paths;
};

// Sparse ancestor -> path-count map, sorted by ancestor index.
using Plist = std::vector<PlistEntry>;

/*
  Prefix, Suffix and plist tables of a DAG under a filter set.

  prefix[v]  copies v receives (the source is pinned to 1). A parent p
             contributes prefix[p], or min(prefix[p], 1) when p is a filter.
  plist[v]   for each ancestor x, the number of x -> v paths that do not pass
             through a filter or source strictly between x and v. Always holds
             {v: 1}. Filters and the source hand {self: 1} to their children
             instead of their own list.
  suffix[v]  number of nonempty such paths starting at v and ending at a
             non-source node: sum over x != v of plist[x][v].
*/
struct PathStats {
  std::vector<Count> prefix;
  std::vector<Count> suffix;
  std::vector<Plist> plist;
  FilterSet filters;

  // 0 for paths not recorded.
  Count paths(NodeIndex from, NodeIndex to) const;
};

// One pass over the topological order. Throws CycleError.
PathStats compute_stats(const CGraph& g, const FilterSet& filters);

// Prefix table only; O(|E|) additions. Used by Greedy_L.
std::vector<Count> compute_prefix(const CGraph& g, const FilterSet& filters);

// Marginal gain of adding v: (prefix(v) − 1) × suffix(v), or 0 for a source
// and for nodes that receive nothing. Throws Errc::kAlreadyFilter.
Count impact(const CGraph& g, const PathStats& stats, NodeIndex v);
Count impact(const CGraph& g, const FilterSet& filters, NodeIndex v);

// Impact of every node; filters and sources map to 0.
std::vector<Count> impact_table(const CGraph& g, const PathStats& stats);
std::vector<Count> impact_table(const CGraph& g, const FilterSet& filters);

}  // namespace flowfilter
