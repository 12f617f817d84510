#include "flowfilter/propagation.hpp"

namespace flowfilter {

CountTable simulate(const CGraph& g, const FilterSet& filters) {
  const NodeIndex source = g.single_source();
  const TopoOrder order = topological_order(g);
  const auto is_filter = filters.mask(g.node_count());

  CountTable t;
  t.received.assign(g.node_count(), 0);
  t.forwarded.assign(g.node_count(), 0);
  for (NodeIndex v : order) {
    if (v == source) {
      t.forwarded[v] = 1;
      continue;
    }
    Count sum = 0;
    for (NodeIndex p : g.in(v)) sum += t.forwarded[p];
    if (is_filter[v]) {
      t.forwarded[v] = sum > 0 ? Count(1) : Count(0);
    } else {
      t.forwarded[v] = sum;
    }
    t.received[v] = std::move(sum);
  }
  return t;
}

Count phi_total(const CGraph& g, const FilterSet& filters) {
  const CountTable t = simulate(g, filters);
  Count total = 0;
  for (const Count& c : t.received) total += c;
  return total;
}

Count objective_f(const CGraph& g, const FilterSet& filters, const Count& phi_empty) {
  return phi_empty - phi_total(g, filters);
}

Count objective_f(const CGraph& g, const FilterSet& filters) {
  return objective_f(g, filters, phi_total(g, FilterSet{}));
}

}  // namespace flowfilter
