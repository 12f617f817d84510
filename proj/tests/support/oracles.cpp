#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace flowfilter::testing {

Count enumerate_paths(const CGraph& g, NodeIndex from, NodeIndex to) {
  Count total = 0;
  std::function<void(NodeIndex)> walk = [&](NodeIndex u) {
    if (u == to) total += 1;
    for (NodeIndex w : g.out(u)) walk(w);
  };
  walk(from);
  return total;
}

Count enumerate_suffix(const CGraph& g, const FilterSet& filters, NodeIndex v) {
  const auto is_filter = filters.mask(g.node_count());
  Count total = 0;
  std::function<void(NodeIndex)> walk = [&](NodeIndex u) {
    for (NodeIndex w : g.out(u)) {
      if (g.is_source(w)) continue;
      total += 1;
      if (!is_filter[w]) walk(w);
    }
  };
  walk(v);
  return total;
}

bool has_cycle(const CGraph& g) {
  std::vector<int> color(g.node_count(), 0);
  std::function<bool(NodeIndex)> visit = [&](NodeIndex u) {
    color[u] = 1;
    for (NodeIndex w : g.out(u)) {
      if (color[w] == 1) return true;
      if (color[w] == 0 && visit(w)) return true;
    }
    color[u] = 2;
    return false;
  };
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    if (color[v] == 0 && visit(v)) return true;
  }
  return false;
}

bool has_path(const CGraph& g, NodeIndex from, NodeIndex to) {
  std::vector<std::uint8_t> seen(g.node_count(), 0);
  std::vector<NodeIndex> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    NodeIndex u = stack.back();
    stack.pop_back();
    if (u == to) return true;
    for (NodeIndex w : g.out(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

CGraph random_digraph(std::size_t n, double edge_prob, std::mt19937_64& rng) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(edge_prob);
  for (NodeIndex u = 0; u < n; ++u) {
    for (NodeIndex v = 0; v < n; ++v) {
      if (u != v && coin(rng)) edges.push_back({u, v});
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return CGraph::build(std::move(labels), std::move(edges));
}

FilterSet random_filters(const CGraph& g, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  FilterSet f;
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    if (!g.is_source(v) && coin(rng)) f.members.push_back(v);
  }
  f.k_requested = f.members.size();
  return f;
}

namespace {

double level_probability(double x, double y, int distance) {
  if (distance == 0) return 0.0;
  return std::clamp(x / std::pow(y, std::abs(distance)), 0.0, 1.0);
}

}  // namespace

Moments layered_edge_moments_fixed(int levels, int width, double x, double y) {
  // Edge count = Σ over node pairs X_ab + S, with S the number of level-1
  // nodes. Levels are i.i.d. uniform, so two pair indicators covary only when
  // the pairs share a node.
  const double L = levels;
  const double n = static_cast<double>(levels) * width;
  double q = 0.0;
  std::vector<double> r(static_cast<std::size_t>(levels), 0.0);
  for (int i = 0; i < levels; ++i) {
    for (int j = 0; j < levels; ++j) {
      const double p = level_probability(x, y, i - j);
      q += p / (L * L);
      r[static_cast<std::size_t>(i)] += p / L;
    }
  }
  double r2 = 0.0;
  for (double v : r) r2 += v * v / L;
  const double pairs = n * (n - 1) / 2;
  const double mean = pairs * q + n / L;
  double var = pairs * q * (1 - q);
  var += n * (n - 1) * (n - 2) * (r2 - q * q);   // ordered pairs of pairs sharing one node
  var += 2 * pairs * 2 * (r[0] - q) / L;         // Cov(pair sum, S)
  var += n * (1 / L) * (1 - 1 / L);              // Var(S)
  return {mean, std::sqrt(var)};
}

Moments layered_edge_moments_poisson(int levels, int width, double x, double y) {
  // Level sizes n_i ~ Poisson(W) independent. Given sizes, the cross-level
  // edges between i < j are Binomial(n_i n_j, p_{j-i}) and n_1 source edges.
  const double W = width;
  double mean = W;
  double var_conditional = 0.0;
  // Q = Σ_{i<j} p_ij n_i n_j + n_1; Var(Q) from Poisson moments.
  struct Term {
    int i, j;
    double p;
  };
  std::vector<Term> terms;
  for (int i = 0; i < levels; ++i) {
    for (int j = i + 1; j < levels; ++j) {
      const double p = level_probability(x, y, j - i);
      terms.push_back({i, j, p});
      mean += W * W * p;
      var_conditional += W * W * p * (1 - p);
    }
  }
  double var_q = W;  // Var(n_1)
  for (const Term& a : terms) {
    for (const Term& b : terms) {
      const int shared = (a.i == b.i) + (a.i == b.j) + (a.j == b.i) + (a.j == b.j);
      double cov = 0.0;
      if (shared == 2) cov = W * W + 2 * W * W * W;
      if (shared == 1) cov = W * W * W;
      var_q += a.p * b.p * cov;
    }
    if (a.i == 0) var_q += 2 * a.p * W * W;  // Cov(n_1 n_j, n_1) = W^2
  }
  return {mean, std::sqrt(var_conditional + var_q)};
}

}  // namespace flowfilter::testing
