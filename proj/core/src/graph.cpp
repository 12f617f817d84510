#include "flowfilter/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace flowfilter {

CGraph CGraph::build(std::vector<std::string> labels, std::vector<Edge> edges,
                     std::optional<std::vector<NodeIndex>> sources) {
  if (labels.empty()) throw Error(Errc::kEmptyGraph, "graph has no nodes");

  CGraph g;
  const std::size_t n = labels.size();
  g.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i].empty()) throw Error(Errc::kParse, "empty node label");
    if (!g.index_.emplace(labels[i], static_cast<NodeIndex>(i)).second) {
      throw Error(Errc::kParse, "duplicate node label '" + labels[i] + "'");
    }
  }
  g.labels_ = std::move(labels);

  std::vector<std::size_t> out_deg(n, 0), in_deg(n, 0);
  for (const Edge& e : edges) {
    if (e.from >= n || e.to >= n) throw Error(Errc::kInvalidArgument, "edge endpoint out of range");
    if (e.from == e.to) throw Error(Errc::kSelfLoop, "self-loop at '" + g.labels_[e.from] + "'");
    ++out_deg[e.from];
    ++in_deg[e.to];
  }

  g.out_offsets_.assign(n + 1, 0);
  g.in_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    g.out_offsets_[v + 1] = g.out_offsets_[v] + out_deg[v];
    g.in_offsets_[v + 1] = g.in_offsets_[v] + in_deg[v];
  }
  g.out_targets_.resize(edges.size());
  g.in_sources_.resize(edges.size());
  {
    std::vector<std::size_t> out_pos(g.out_offsets_.begin(), g.out_offsets_.end() - 1);
    std::vector<std::size_t> in_pos(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
    for (const Edge& e : edges) {
      g.out_targets_[out_pos[e.from]++] = e.to;
      g.in_sources_[in_pos[e.to]++] = e.from;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.out_targets_.begin() + static_cast<std::ptrdiff_t>(g.out_offsets_[v]);
    auto last = g.out_targets_.begin() + static_cast<std::ptrdiff_t>(g.out_offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw Error(Errc::kDuplicateEdge, "duplicate edge '" + g.labels_[v] + "' -> '" +
                                            g.labels_[*dup] + "'");
    }
    std::sort(g.in_sources_.begin() + static_cast<std::ptrdiff_t>(g.in_offsets_[v]),
              g.in_sources_.begin() + static_cast<std::ptrdiff_t>(g.in_offsets_[v + 1]));
  }
  g.edges_ = std::move(edges);

  g.is_source_.assign(n, 0);
  if (sources) {
    for (NodeIndex s : *sources) {
      if (s >= n) throw Error(Errc::kUnknownNode, "source index out of range");
      if (!g.is_source_[s]) {
        g.is_source_[s] = 1;
        g.sources_.push_back(s);
      }
    }
    std::sort(g.sources_.begin(), g.sources_.end());
  } else {
    for (std::size_t v = 0; v < n; ++v) {
      if (in_deg[v] == 0) {
        g.is_source_[v] = 1;
        g.sources_.push_back(static_cast<NodeIndex>(v));
      }
    }
  }
  return g;
}

std::optional<NodeIndex> CGraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeIndex CGraph::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw Error(Errc::kUnknownNode, "unknown node '" + std::string(label) + "'");
}

bool CGraph::has_edge(NodeIndex from, NodeIndex to) const {
  auto o = out(from);
  return std::binary_search(o.begin(), o.end(), to);
}

NodeIndex CGraph::single_source() const {
  if (sources_.empty()) throw Error(Errc::kNoSource, "graph has no source");
  if (sources_.size() > 1) {
    throw Error(Errc::kMultipleSources,
                "graph has " + std::to_string(sources_.size()) +
                    " sources; add a super-source first");
  }
  return sources_.front();
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

CGraph parse_edge_list(std::string_view text, std::optional<std::string_view> source_hint) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeIndex> index;
  std::vector<Edge> edges;

  auto intern = [&](std::string_view label) {
    auto [it, inserted] = index.emplace(std::string(label), static_cast<NodeIndex>(labels.size()));
    if (inserted) labels.emplace_back(label);
    return it->second;
  };

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;

    auto tab = line.find('\t');
    if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos) {
      throw Error(Errc::kParse, "line " + std::to_string(line_no) +
                                    ": expected exactly two tab-separated labels");
    }
    auto u = trim(line.substr(0, tab));
    auto v = trim(line.substr(tab + 1));
    if (u.empty() || v.empty()) {
      throw Error(Errc::kParse, "line " + std::to_string(line_no) + ": empty node label");
    }
    if (u == v) {
      throw Error(Errc::kSelfLoop,
                  "line " + std::to_string(line_no) + ": self-loop at '" + std::string(u) + "'");
    }
    NodeIndex a = intern(u);
    NodeIndex b = intern(v);
    edges.push_back({a, b});
  }

  if (labels.empty()) throw Error(Errc::kEmptyGraph, "edge list contains no edges");

  std::optional<std::vector<NodeIndex>> sources;
  if (source_hint) {
    auto it = index.find(std::string(*source_hint));
    if (it == index.end()) {
      throw Error(Errc::kUnknownNode,
                  "source '" + std::string(*source_hint) + "' is not a node of the graph");
    }
    sources = std::vector<NodeIndex>{it->second};
  }
  return CGraph::build(std::move(labels), std::move(edges), std::move(sources));
}

std::string serialize_edge_list(const CGraph& g) {
  std::ostringstream os;
  for (NodeIndex u = 0; u < g.node_count(); ++u) {
    for (NodeIndex v : g.out(u)) os << g.label(u) << '\t' << g.label(v) << '\n';
  }
  return os.str();
}

namespace {

[[noreturn]] void throw_cycle(const CGraph& g, const std::vector<std::size_t>& remaining_in) {
  // Every unsorted node keeps an unsorted in-neighbor, so walking backwards
  // from any of them must revisit a node.
  NodeIndex start = 0;
  while (remaining_in[start] == 0) ++start;
  std::vector<std::size_t> seen_at(g.node_count(), SIZE_MAX);
  std::vector<NodeIndex> walk;
  NodeIndex v = start;
  while (seen_at[v] == SIZE_MAX) {
    seen_at[v] = walk.size();
    walk.push_back(v);
    for (NodeIndex p : g.in(v)) {
      if (remaining_in[p] > 0) {
        v = p;
        break;
      }
    }
  }
  std::vector<std::string> cycle;
  for (std::size_t i = walk.size(); i-- > seen_at[v];) cycle.push_back(g.label(walk[i]));
  cycle.push_back(cycle.front());
  throw CycleError(std::move(cycle));
}

}  // namespace

TopoOrder topological_order(const CGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> remaining_in(n);
  std::priority_queue<NodeIndex, std::vector<NodeIndex>, std::greater<>> ready;
  for (NodeIndex v = 0; v < n; ++v) {
    remaining_in[v] = g.in_degree(v);
    if (remaining_in[v] == 0) ready.push(v);
  }
  TopoOrder order;
  order.reserve(n);
  while (!ready.empty()) {
    NodeIndex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (NodeIndex w : g.out(v)) {
      if (--remaining_in[w] == 0) ready.push(w);
    }
  }
  if (order.size() != n) throw_cycle(g, remaining_in);
  return order;
}

bool is_acyclic(const CGraph& g) {
  try {
    topological_order(g);
    return true;
  } catch (const CycleError&) {
    return false;
  }
}

CGraph add_super_source(const CGraph& g) {
  auto sources = g.sources();
  if (sources.size() == 1) return g;
  if (sources.empty()) {
    throw Error(Errc::kNoSource, "every node has an incoming edge and no source was given");
  }
  std::string label(kSuperSourceLabel);
  while (g.find(label)) label += '_';

  std::vector<std::string> labels(g.labels().begin(), g.labels().end());
  const auto super = static_cast<NodeIndex>(labels.size());
  labels.push_back(label);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (NodeIndex s : sources) edges.push_back({super, s});
  return CGraph::build(std::move(labels), std::move(edges), std::vector<NodeIndex>{super});
}

std::vector<NodeIndex> reachable_from(const CGraph& g, NodeIndex v) {
  if (v >= g.node_count()) throw Error(Errc::kUnknownNode, "node index out of range");
  std::vector<std::uint8_t> seen(g.node_count(), 0);
  std::vector<NodeIndex> stack{v};
  seen[v] = 1;
  while (!stack.empty()) {
    NodeIndex u = stack.back();
    stack.pop_back();
    for (NodeIndex w : g.out(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  std::vector<NodeIndex> result;
  for (NodeIndex u = 0; u < g.node_count(); ++u) {
    if (seen[u]) result.push_back(u);
  }
  return result;
}

}  // namespace flowfilter
