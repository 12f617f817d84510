#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "flowfilter/graph.hpp"

namespace flowfilter {

struct Junction {
  NodeIndex node;    // tree node with more than one tree child
  NodeIndex branch;  // child of `node` whose subtree holds the signed node
};

// DFS over the nodes reachable from a root; children are visited in
// ascending index so the annotation is deterministic.
struct DfsAnnotation {
  NodeIndex root = 0;
  std::vector<std::uint8_t> visited;
  std::vector<std::size_t> discovery;  // 1-based σ; 0 for unvisited nodes
  std::vector<std::size_t> finish;     // last σ inside the subtree
  std::vector<std::optional<NodeIndex>> tree_parent;
  std::vector<std::size_t> tree_children;
  // Junctions on the tree path root -> v, root first.
  std::vector<std::vector<Junction>> signature;

  bool is_tree_edge(NodeIndex u, NodeIndex v) const { return tree_parent[v] == u; }
  bool is_junction(NodeIndex v) const { return tree_children[v] > 1; }
  // v lies in the DFS subtree of u (u included).
  bool in_subtree(NodeIndex u, NodeIndex v) const {
    return discovery[u] <= discovery[v] && discovery[v] <= finish[u];
  }
};

DfsAnnotation annotate_dfs(const CGraph& g, NodeIndex root);

// Deepest junction shared by the two signatures where the paths part, as
// (junction, branch towards u, branch towards v). nullopt when one node is a
// tree ancestor of the other.
std::optional<std::pair<Junction, NodeIndex>> split_junction(const DfsAnnotation& dfs,
                                                             NodeIndex u, NodeIndex v);

// Signature test for a non-tree edge u -> v: the paths part at a junction w
// and σ(v) < σ(branch of w towards u) <= σ(u).
bool crosses_to_earlier_branch(const DfsAnnotation& dfs, NodeIndex u, NodeIndex v);

// Whether a non-tree edge u -> v between visited nodes can be kept: it either
// crosses into an earlier branch or points down into u's own subtree.
bool keeps_edge(const DfsAnnotation& dfs, NodeIndex u, NodeIndex v);

/*
  Connected acyclic subgraph of the part of g reachable from root: all DFS
  tree edges plus every other edge that passes keeps_edge. Every kept edge
  (u, v) has finish-order(v) before finish-order(u), so the result is acyclic;
  the only rejected edges close a cycle with the tree path, so it is maximal.
  Edges keep input order and nodes keep their relative index order. Throws
  Errc::kRootNotFound.
*/
CGraph extract_dag(const CGraph& g, NodeIndex root);
CGraph extract_dag(const CGraph& g, std::string_view root_label);

struct BestDag {
  NodeIndex root;  // index in the input graph
  CGraph dag;
};

// extract_dag from every node; most nodes, then most edges, then smallest root.
BestDag best_dag(const CGraph& g, unsigned jobs = 1);

}  // namespace flowfilter
