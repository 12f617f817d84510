#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flowfilter/graph.hpp"

namespace flowfilter {

// Chosen filter nodes plus how they were chosen. `members` keeps selection
// order; it never contains a source.
struct FilterSet {
  std::vector<NodeIndex> members;
  std::string algorithm;
  std::size_t k_requested = 0;
  std::optional<std::uint64_t> seed;

  bool contains(NodeIndex v) const {
    return std::find(members.begin(), members.end(), v) != members.end();
  }
  std::size_t size() const noexcept { return members.size(); }

  std::vector<NodeIndex> sorted() const {
    auto s = members;
    std::sort(s.begin(), s.end());
    return s;
  }

  // Per-node membership flags for a graph with n nodes.
  std::vector<std::uint8_t> mask(std::size_t n) const {
    std::vector<std::uint8_t> m(n, 0);
    for (NodeIndex v : members) m.at(v) = 1;
    return m;
  }

  static FilterSet of(std::vector<NodeIndex> nodes, std::string algorithm = "manual") {
    FilterSet f;
    f.k_requested = nodes.size();
    f.members = std::move(nodes);
    f.algorithm = std::move(algorithm);
    return f;
  }
};

// Resolves labels against g; throws Errc::kUnknownNode.
inline FilterSet filters_from_labels(const CGraph& g, const std::vector<std::string>& labels) {
  std::vector<NodeIndex> nodes;
  for (const auto& l : labels) {
    NodeIndex v = g.index_of(l);
    if (std::find(nodes.begin(), nodes.end(), v) == nodes.end()) nodes.push_back(v);
  }
  return FilterSet::of(std::move(nodes));
}

}  // namespace flowfilter
