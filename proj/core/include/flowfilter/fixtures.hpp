#pragma once

#include <string_view>

#include "flowfilter/graph.hpp"

// Small reference graphs used by tests, benchmarks and documentation.
namespace flowfilter::fixtures {

// s feeds two distributors x, y; z2 hears from both; w hears from z1, z2, z3.
extern const std::string_view kFig1;
// Three relays merge into A before t; B fans out to four leaves.
extern const std::string_view kFig2;
// s -> {a, b} -> c -> d
extern const std::string_view kDiamond;
// s -> r, s -> a, r -> a, r -> b, a -> c. A c-tree: dropping s leaves a tree.
extern const std::string_view kTree1;
// s -> a -> b -> c
extern const std::string_view kChain;
// Two routes merge in m1, then an in-degree-1 path m1 -> m2 -> m3 -> t.
extern const std::string_view kMergerPath;

// Each parses the matching text with source "s".
CGraph fig1();
CGraph fig2();
CGraph diamond();
CGraph tree1();
CGraph chain();
CGraph merger_path();

}  // namespace flowfilter::fixtures
