#pragma once

// Brute-force reference computations used by the property and acceptance
// suites. Nothing here calls into path_stats, placement or dag_extract.

#include <cstdint>
#include <random>
#include <vector>

#include "flowfilter/count.hpp"
#include "flowfilter/filter_set.hpp"
#include "flowfilter/graph.hpp"

namespace flowfilter::testing {

// Distinct directed paths from -> to, by explicit enumeration. A path of
// length 0 counts when from == to.
Count enumerate_paths(const CGraph& g, NodeIndex from, NodeIndex to);

// Nonempty paths starting at v that do not pass through a filter or source
// as an interior node and do not end at a source.
Count enumerate_suffix(const CGraph& g, const FilterSet& filters, NodeIndex v);

// Three-color DFS cycle check, independent of Kahn's algorithm.
bool has_cycle(const CGraph& g);

// Whether `to` is reachable from `from` by a path of length >= 0.
bool has_path(const CGraph& g, NodeIndex from, NodeIndex to);

// Arbitrary digraph (cycles allowed), no self-loops.
CGraph random_digraph(std::size_t n, double edge_prob, std::mt19937_64& rng);

// Each eligible (non-source) node independently with probability p.
FilterSet random_filters(const CGraph& g, double p, std::mt19937_64& rng);

struct Moments {
  double mean;
  double stddev;
};

// Mean and standard deviation of the layered generator's edge count (source
// edges included), derived from pairwise covariances of the node-level
// assignment. Fixed: exactly levels × width nodes. Poisson: independent
// Poisson(width) nodes per level.
Moments layered_edge_moments_fixed(int levels, int width, double x, double y);
Moments layered_edge_moments_poisson(int levels, int width, double x, double y);

}  // namespace flowfilter::testing
