#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flowfilter/count.hpp"
#include "flowfilter/filter_set.hpp"
#include "flowfilter/graph.hpp"
#include "flowfilter/placement.hpp"

namespace flowfilter {

// F(V): the redundancy removed by filtering every node.
Count max_objective(const CGraph& g);

// F(A) / F(V), exact. A graph with F(V) = 0 has nothing to remove and scores 1.
Ratio filter_ratio(const CGraph& g, const FilterSet& filters);
Ratio filter_ratio(const Count& f, const Count& f_max);

struct PlacementResult {
  FilterSet filters;
  Count phi_empty;  // Φ(∅, V)
  Count phi;        // Φ(A, V)
  Count f;          // F(A)
  Count f_max;      // F(V)
  Ratio fr;
};

PlacementResult evaluate_placement(const CGraph& g, const FilterSet& filters);

inline constexpr std::uint64_t kDefaultOracleBudget = 1'000'000;

struct OracleResult {
  FilterSet filters;
  Count value;
  std::uint64_t subsets_evaluated = 0;
};

// Number of subsets of size <= k drawn from n items, saturating at UINT64_MAX.
std::uint64_t subsets_up_to(std::size_t n, std::size_t k);

// Exhaustive maximum of F over all subsets of at most k eligible nodes. Among
// maximizers the smallest set wins, then the lexicographically smallest
// sorted index list. Throws Errc::kBudgetExceeded when more than `budget`
// subsets would be evaluated.
OracleResult oracle(const CGraph& g, std::size_t k, std::uint64_t budget = kDefaultOracleBudget);

struct FRCurveOptions {
  std::vector<Algorithm> algorithms;
  std::size_t k_max = 10;
  std::size_t runs = 25;  // trials per randomized cell; deterministic cells run once
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool measure_time = true;
  int timing_repetitions = 3;  // median over this many runs for deterministic cells
};

struct FRRow {
  Algorithm algorithm;
  std::size_t k = 0;
  Ratio fr;           // (Σ F over runs) / (runs × F(V))
  Count f_sum;        // Σ F over runs
  std::size_t runs = 1;
  double wall_ms = 0; // per run
  std::vector<FilterSet> placements;
};

struct FRCurve {
  Count f_max;
  std::vector<FRRow> rows;  // ordered by algorithm (as given), then k
};

// Seed of trial `run` in cell (algorithm, k), derived from the master seed.
std::uint64_t trial_seed(std::uint64_t master, Algorithm algorithm, std::size_t k, std::size_t run);

FRCurve fr_curve(const CGraph& g, const FRCurveOptions& options);

// Header `algorithm,k,fr,runs,wall_ms`; fr with 6 fractional digits.
std::string to_csv(const FRCurve& curve);

// Counts that fit 64 bits become JSON integers, larger ones decimal strings.
nlohmann::json count_json(const Count& c);
nlohmann::json to_json(const CGraph& g, const PlacementResult& result);
nlohmann::json to_json(const CGraph& g, const FRCurve& curve);

}  // namespace flowfilter
