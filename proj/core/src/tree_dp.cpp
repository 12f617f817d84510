#include "flowfilter/tree_dp.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace flowfilter {

std::optional<NodeIndex> CTree::tree_parent(NodeIndex v) const { return parent_.at(v); }

CTree certify_ctree(const CGraph& g) {
  const NodeIndex source = g.single_source();
  if (g.in_degree(source) != 0) {
    throw Error(Errc::kNotACTree, "source '" + g.label(source) + "' has incoming edges");
  }
  const std::size_t n = g.node_count();
  CTree t;
  t.source_ = source;
  t.parent_.assign(n, std::nullopt);
  t.source_edge_.assign(n, 0);
  t.children_.assign(n, {});
  for (NodeIndex v = 0; v < n; ++v) {
    if (v == source) continue;
    for (NodeIndex p : g.in(v)) {
      if (p == source) {
        t.source_edge_[v] = 1;
      } else if (t.parent_[v]) {
        throw Error(Errc::kNotACTree,
                    "'" + g.label(v) + "' has more than one non-source parent");
      } else {
        t.parent_[v] = p;
        t.children_[p].push_back(v);
      }
    }
  }
  for (NodeIndex v = 0; v < n; ++v) {
    if (v != source && !t.parent_[v]) t.roots_.push_back(v);
  }
  // Every node must climb to a root; otherwise its parent chain is a cycle.
  std::vector<std::uint8_t> state(n, 0);  // 0 unknown, 1 on chain, 2 ok
  for (NodeIndex r : t.roots_) state[r] = 2;
  state[source] = 2;
  for (NodeIndex v = 0; v < n; ++v) {
    std::vector<NodeIndex> chain;
    NodeIndex u = v;
    while (state[u] == 0) {
      state[u] = 1;
      chain.push_back(u);
      u = *t.parent_[u];
    }
    if (state[u] == 1) {
      throw Error(Errc::kNotACTree, "tree edges form a cycle through '" + g.label(u) + "'");
    }
    for (NodeIndex c : chain) state[c] = 2;
  }
  t.graph_ = g;
  return t;
}

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

struct BinaryNode {
  std::optional<NodeIndex> real;  // nullopt for dummy nodes
  std::int64_t source_edge = 0;
  int left = -1;
  int right = -1;
  std::int64_t max_inflow = 0;  // bound on copies arriving from above
};

class Binarized {
 public:
  explicit Binarized(const CTree& t) : t_(t) {
    // The top holder is a dummy whose inflow is 0: forest roots only hear
    // from the source through their own source edges.
    nodes_.push_back({});
    link(0, t.roots());
  }

  std::vector<BinaryNode>& nodes() { return nodes_; }

 private:
  int make_real(NodeIndex v) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back({v, t_.has_source_edge(v) ? 1 : 0});
    link(id, t_.children(v));
    return id;
  }

  void link(int parent, std::span<const NodeIndex> children) {
    if (children.empty()) return;
    const int left = make_real(children[0]);
    nodes_[parent].left = left;
    if (children.size() == 1) return;
    int right;
    if (children.size() == 2) {
      right = make_real(children[1]);
    } else {
      right = static_cast<int>(nodes_.size());
      nodes_.push_back({});
      link(right, children.subspan(1));
    }
    nodes_[parent].right = right;
  }

  const CTree& t_;
  std::vector<BinaryNode> nodes_;
};

// cost[b][c][i]: fewest receipts in the subtree of b given inflow c into b
// and at most i filters.
using Table = std::vector<std::vector<std::int64_t>>;

}  // namespace

TreeDpSolution solve_tree_dp(const CTree& t, std::size_t k) {
  Binarized bin(t);
  auto& nodes = bin.nodes();
  const std::size_t budget = k;

  // Preorder gives parents before children; inflow bounds flow downwards.
  std::vector<int> preorder;
  {
    std::vector<int> stack{0};
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      preorder.push_back(b);
      for (int c : {nodes[b].right, nodes[b].left}) {
        if (c >= 0) {
          nodes[c].max_inflow = nodes[b].max_inflow + nodes[b].source_edge;
          stack.push_back(c);
        }
      }
    }
  }

  std::vector<Table> cost(nodes.size());
  auto child_cost = [&](int child, std::int64_t inflow, std::size_t i) -> std::int64_t {
    if (child < 0) return 0;
    return cost[child][static_cast<std::size_t>(inflow)][i];
  };
  // min over j of left(j) + right(i - j), and the best j.
  auto combine = [&](const BinaryNode& b, std::int64_t inflow, std::size_t i) {
    std::int64_t best = kInf;
    std::size_t best_j = 0;
    for (std::size_t j = 0; j <= i; ++j) {
      std::int64_t c = child_cost(b.left, inflow, j) + child_cost(b.right, inflow, i - j);
      if (c < best) {
        best = c;
        best_j = j;
      }
    }
    return std::pair{best, best_j};
  };

  for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
    const BinaryNode& b = nodes[*it];
    Table& tab = cost[*it];
    tab.assign(static_cast<std::size_t>(b.max_inflow) + 1, std::vector<std::int64_t>(budget + 1));
    for (std::int64_t c = 0; c <= b.max_inflow; ++c) {
      for (std::size_t i = 0; i <= budget; ++i) {
        std::int64_t best;
        if (!b.real) {
          best = combine(b, c, i).first;
        } else {
          const std::int64_t received = c + b.source_edge;
          best = received + combine(b, received, i).first;
          if (i >= 1) {
            best = std::min(best, received + combine(b, std::min<std::int64_t>(received, 1), i - 1).first);
          }
        }
        if (i >= 1) best = std::min(best, tab[static_cast<std::size_t>(c)][i - 1]);
        tab[static_cast<std::size_t>(c)][i] = best;
      }
    }
  }

  TreeDpSolution sol;
  sol.filters.algorithm = "tree-dp";
  sol.filters.k_requested = k;

  // Replay the decisions top-down; ties prefer fewer filters.
  struct Frame {
    int b;
    std::int64_t inflow;
    std::size_t i;
  };
  std::vector<Frame> stack{{0, 0, budget}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const BinaryNode& b = nodes[f.b];
    const auto& row = cost[f.b][static_cast<std::size_t>(f.inflow)];
    std::size_t i = f.i;
    while (i > 0 && row[i - 1] == row[i]) --i;
    const std::int64_t target = row[i];

    std::int64_t pass = f.inflow;
    std::size_t children_budget = i;
    if (b.real) {
      const std::int64_t received = f.inflow + b.source_edge;
      pass = received;
      if (received + combine(b, received, i).first != target) {
        sol.filters.members.push_back(*b.real);
        pass = std::min<std::int64_t>(received, 1);
        children_budget = i - 1;
      }
    }
    auto [_, j] = combine(b, pass, children_budget);
    if (b.left >= 0) stack.push_back({b.left, pass, j});
    if (b.right >= 0) stack.push_back({b.right, pass, children_budget - j});
  }
  std::sort(sol.filters.members.begin(), sol.filters.members.end());

  const std::int64_t unfiltered = cost[0][0][0];
  const std::int64_t best = cost[0][0][budget];
  sol.value = Count(unfiltered - best);
  return sol;
}

FilterSet tree_dp(const CTree& t, std::size_t k) { return solve_tree_dp(t, k).filters; }

}  // namespace flowfilter
