#pragma once

#include <vector>

#include "flowfilter/count.hpp"
#include "flowfilter/filter_set.hpp"
#include "flowfilter/graph.hpp"

namespace flowfilter {

// Per-node copy counts of one item flooded from the single source.
struct CountTable {
  std::vector<Count> received;
  std::vector<Count> forwarded;
};

// Exact deterministic flood over a DAG with one source. The source forwards
// one copy and is credited with no receipts; a filter forwards
// min(received, 1); every other node forwards everything it receives.
// Throws CycleError, or Error(kNoSource / kMultipleSources).
CountTable simulate(const CGraph& g, const FilterSet& filters);

// Φ(A, V): receipts summed over all non-source nodes.
Count phi_total(const CGraph& g, const FilterSet& filters);

// F(A) = Φ(∅, V) − Φ(A, V).
Count objective_f(const CGraph& g, const FilterSet& filters);

// Same as objective_f with Φ(∅, V) supplied by the caller.
Count objective_f(const CGraph& g, const FilterSet& filters, const Count& phi_empty);

}  // namespace flowfilter
