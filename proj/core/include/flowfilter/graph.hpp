#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flowfilter/errors.hpp"

namespace flowfilter {

using NodeIndex = std::uint32_t;

// (from, to): `from` propagates items to `to`.
struct Edge {
  NodeIndex from;
  NodeIndex to;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/*
  Communication graph: an immutable directed simple graph with a designated
  source set. Nodes carry string labels externally and dense indices 0..n-1
  internally. Adjacency is kept in CSR form, each neighbor list sorted by
  ascending index so traversals are deterministic.
*/
class CGraph {
 public:
  CGraph() = default;

  // Validates and builds. Rejects self-loops, duplicate edges, duplicate or
  // empty labels, an empty node set and out-of-range indices. When `sources`
  // is nullopt the sources are the in-degree-0 nodes.
  static CGraph build(std::vector<std::string> labels, std::vector<Edge> edges,
                      std::optional<std::vector<NodeIndex>> sources = std::nullopt);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& label(NodeIndex v) const { return labels_.at(v); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::optional<NodeIndex> find(std::string_view label) const;
  // Throws Errc::kUnknownNode.
  NodeIndex index_of(std::string_view label) const;

  // Edges in construction order.
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const NodeIndex> out(NodeIndex v) const {
    return {out_targets_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
  }
  std::span<const NodeIndex> in(NodeIndex v) const {
    return {in_sources_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
  }
  std::size_t out_degree(NodeIndex v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::size_t in_degree(NodeIndex v) const { return in_offsets_[v + 1] - in_offsets_[v]; }
  bool has_edge(NodeIndex from, NodeIndex to) const;

  std::span<const NodeIndex> sources() const noexcept { return sources_; }
  bool is_source(NodeIndex v) const { return is_source_.at(v) != 0; }

  // Throws Errc::kMultipleSources / kNoSource unless exactly one source.
  NodeIndex single_source() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeIndex> index_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_;
  std::vector<NodeIndex> out_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<NodeIndex> in_sources_;
  std::vector<NodeIndex> sources_;
  std::vector<std::uint8_t> is_source_;
};

// Permutation of node indices; every edge goes from an earlier to a later position.
using TopoOrder = std::vector<NodeIndex>;

// Tab-separated edge list, one `u<TAB>v` per line, `#` starts a comment.
// Sources are {source_hint} when given, otherwise the in-degree-0 nodes.
CGraph parse_edge_list(std::string_view text,
                       std::optional<std::string_view> source_hint = std::nullopt);

// Inverse of parse_edge_list: edges grouped by tail in dense-index order.
std::string serialize_edge_list(const CGraph& g);

// Kahn's algorithm with ascending-index tie-breaking. Throws CycleError.
TopoOrder topological_order(const CGraph& g);

bool is_acyclic(const CGraph& g);

inline constexpr std::string_view kSuperSourceLabel = "__super__";

// Adds a super-source feeding every source when there is more than one
// source; returns `g` unchanged when there is exactly one.
CGraph add_super_source(const CGraph& g);

// Nodes reachable from v (v included), ascending index.
std::vector<NodeIndex> reachable_from(const CGraph& g, NodeIndex v);

}  // namespace flowfilter
