#include "flowfilter/path_stats.hpp"

#include <algorithm>

namespace flowfilter {

Count PathStats::paths(NodeIndex from, NodeIndex to) const {
  const Plist& list = plist.at(to);
  auto it = std::lower_bound(list.begin(), list.end(), from,
                             [](const PlistEntry& e, NodeIndex x) { return e.ancestor < x; });
  if (it == list.end() || it->ancestor != from) return 0;
  return it->paths;
}

PathStats compute_stats(const CGraph& g, const FilterSet& filters) {
  const NodeIndex source = g.single_source();
  const TopoOrder order = topological_order(g);
  const std::size_t n = g.node_count();
  const auto is_filter = filters.mask(n);
  auto resets = [&](NodeIndex v) { return v == source || is_filter[v] != 0; };

  PathStats st;
  st.filters = filters;
  st.prefix.assign(n, 0);
  st.suffix.assign(n, 0);
  st.plist.assign(n, {});

  // Dense accumulator reused across nodes; only touched slots are reset.
  std::vector<Count> acc(n, 0);
  std::vector<std::uint8_t> touched_flag(n, 0);
  std::vector<NodeIndex> touched;
  auto add = [&](NodeIndex x, const Count& c) {
    if (!touched_flag[x]) {
      touched_flag[x] = 1;
      touched.push_back(x);
    }
    acc[x] += c;
  };

  for (NodeIndex v : order) {
    if (v == source) {
      st.prefix[v] = 1;
      st.plist[v].push_back({v, 1});
      continue;
    }

    Count prefix = 0;
    for (NodeIndex p : g.in(v)) {
      if (resets(p)) {
        prefix += is_filter[p] ? Count(st.prefix[p] > 0 ? 1 : 0) : st.prefix[p];
        add(p, 1);
      } else {
        prefix += st.prefix[p];
        for (const PlistEntry& e : st.plist[p]) add(e.ancestor, e.paths);
      }
    }
    st.prefix[v] = std::move(prefix);
    add(v, 1);

    std::sort(touched.begin(), touched.end());
    Plist& list = st.plist[v];
    list.reserve(touched.size());
    for (NodeIndex x : touched) {
      if (x != v) st.suffix[x] += acc[x];
      list.push_back({x, std::move(acc[x])});
      acc[x] = 0;
      touched_flag[x] = 0;
    }
    touched.clear();
  }
  return st;
}

std::vector<Count> compute_prefix(const CGraph& g, const FilterSet& filters) {
  const NodeIndex source = g.single_source();
  const TopoOrder order = topological_order(g);
  const auto is_filter = filters.mask(g.node_count());
  std::vector<Count> prefix(g.node_count(), 0);
  for (NodeIndex v : order) {
    if (v == source) {
      prefix[v] = 1;
      continue;
    }
    Count sum = 0;
    for (NodeIndex p : g.in(v)) {
      if (is_filter[p] && p != source) {
        if (prefix[p] > 0) sum += 1;
      } else {
        sum += prefix[p];
      }
    }
    prefix[v] = std::move(sum);
  }
  return prefix;
}

namespace {

Count impact_unchecked(const CGraph& g, const PathStats& st, NodeIndex v) {
  if (g.is_source(v) || st.prefix[v] <= 1) return 0;
  return (st.prefix[v] - 1) * st.suffix[v];
}

}  // namespace

Count impact(const CGraph& g, const PathStats& stats, NodeIndex v) {
  if (v >= g.node_count()) throw Error(Errc::kUnknownNode, "node index out of range");
  if (stats.filters.contains(v)) {
    throw Error(Errc::kAlreadyFilter, "'" + g.label(v) + "' is already a filter");
  }
  return impact_unchecked(g, stats, v);
}

Count impact(const CGraph& g, const FilterSet& filters, NodeIndex v) {
  if (v < g.node_count() && filters.contains(v)) {
    throw Error(Errc::kAlreadyFilter, "'" + g.label(v) + "' is already a filter");
  }
  return impact(g, compute_stats(g, filters), v);
}

std::vector<Count> impact_table(const CGraph& g, const PathStats& stats) {
  const auto is_filter = stats.filters.mask(g.node_count());
  std::vector<Count> table(g.node_count(), 0);
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    if (!is_filter[v]) table[v] = impact_unchecked(g, stats, v);
  }
  return table;
}

std::vector<Count> impact_table(const CGraph& g, const FilterSet& filters) {
  return impact_table(g, compute_stats(g, filters));
}

}  // namespace flowfilter
