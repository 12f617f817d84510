#include "flowfilter/dag_extract.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace flowfilter {

DfsAnnotation annotate_dfs(const CGraph& g, NodeIndex root) {
  const std::size_t n = g.node_count();
  DfsAnnotation a;
  a.root = root;
  a.visited.assign(n, 0);
  a.discovery.assign(n, 0);
  a.finish.assign(n, 0);
  a.tree_parent.assign(n, std::nullopt);
  a.tree_children.assign(n, 0);
  a.signature.assign(n, {});

  std::size_t clock = 0;
  // (node, next out-neighbor position)
  std::vector<std::pair<NodeIndex, std::size_t>> stack;
  a.visited[root] = 1;
  a.discovery[root] = ++clock;
  stack.emplace_back(root, 0);
  while (!stack.empty()) {
    auto& [u, pos] = stack.back();
    auto out = g.out(u);
    if (pos < out.size()) {
      NodeIndex w = out[pos++];
      if (!a.visited[w]) {
        a.visited[w] = 1;
        a.discovery[w] = ++clock;
        a.tree_parent[w] = u;
        ++a.tree_children[u];
        stack.emplace_back(w, 0);
      }
    } else {
      a.finish[u] = clock;
      stack.pop_back();
    }
  }

  // Signatures in discovery order so a parent's list is complete first.
  std::vector<NodeIndex> by_discovery;
  for (NodeIndex v = 0; v < n; ++v) {
    if (a.visited[v]) by_discovery.push_back(v);
  }
  std::sort(by_discovery.begin(), by_discovery.end(),
            [&](NodeIndex x, NodeIndex y) { return a.discovery[x] < a.discovery[y]; });
  for (NodeIndex v : by_discovery) {
    if (!a.tree_parent[v]) continue;
    NodeIndex p = *a.tree_parent[v];
    a.signature[v] = a.signature[p];
    if (a.is_junction(p)) a.signature[v].push_back({p, v});
  }
  return a;
}

std::optional<std::pair<Junction, NodeIndex>> split_junction(const DfsAnnotation& dfs,
                                                             NodeIndex u, NodeIndex v) {
  const auto& su = dfs.signature[u];
  const auto& sv = dfs.signature[v];
  // Both lists run root-to-leaf along tree paths, so shared junctions form a
  // common prefix; the paths part at the first junction whose branches differ.
  std::size_t i = 0;
  while (i < su.size() && i < sv.size() && su[i].node == sv[i].node) {
    if (su[i].branch != sv[i].branch) return std::pair{su[i], sv[i].branch};
    ++i;
  }
  return std::nullopt;
}

bool crosses_to_earlier_branch(const DfsAnnotation& dfs, NodeIndex u, NodeIndex v) {
  auto split = split_junction(dfs, u, v);
  if (!split) return false;
  const std::size_t branch_u = dfs.discovery[split->first.branch];
  return dfs.discovery[v] < branch_u && branch_u <= dfs.discovery[u];
}

bool keeps_edge(const DfsAnnotation& dfs, NodeIndex u, NodeIndex v) {
  return crosses_to_earlier_branch(dfs, u, v) || (u != v && dfs.in_subtree(u, v));
}

CGraph extract_dag(const CGraph& g, NodeIndex root) {
  if (root >= g.node_count()) throw Error(Errc::kRootNotFound, "root index out of range");
  const DfsAnnotation dfs = annotate_dfs(g, root);

  std::vector<NodeIndex> remap(g.node_count(), 0);
  std::vector<std::string> labels;
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    if (dfs.visited[v]) {
      remap[v] = static_cast<NodeIndex>(labels.size());
      labels.push_back(g.label(v));
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!dfs.visited[e.from] || !dfs.visited[e.to]) continue;
    if (dfs.is_tree_edge(e.from, e.to) || keeps_edge(dfs, e.from, e.to)) {
      edges.push_back({remap[e.from], remap[e.to]});
    }
  }
  CGraph dag = CGraph::build(std::move(labels), std::move(edges),
                             std::vector<NodeIndex>{remap[root]});
  if (!is_acyclic(dag)) {
    throw std::logic_error("extract_dag produced a cycle");
  }
  return dag;
}

CGraph extract_dag(const CGraph& g, std::string_view root_label) {
  auto root = g.find(root_label);
  if (!root) {
    throw Error(Errc::kRootNotFound, "root '" + std::string(root_label) + "' is not a node");
  }
  return extract_dag(g, *root);
}

BestDag best_dag(const CGraph& g, unsigned jobs) {
  const std::size_t n = g.node_count();
  if (n == 0) throw Error(Errc::kEmptyGraph, "graph has no nodes");
  // Score every root first; only the winner is materialized.
  std::vector<std::pair<std::size_t, std::size_t>> score(n);
  auto evaluate = [&](NodeIndex r) {
    CGraph d = extract_dag(g, r);
    score[r] = {d.node_count(), d.edge_count()};
  };

  jobs = std::max(1u, jobs);
  if (jobs == 1 || n < 2) {
    for (NodeIndex r = 0; r < n; ++r) evaluate(r);
  } else {
    std::atomic<NodeIndex> next{0};
    std::vector<std::jthread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
      workers.emplace_back([&] {
        for (NodeIndex r = next++; r < n; r = next++) evaluate(r);
      });
    }
  }

  NodeIndex best = 0;
  for (NodeIndex r = 1; r < n; ++r) {
    if (score[r] > score[best]) best = r;
  }
  return {best, extract_dag(g, best)};
}

}  // namespace flowfilter
