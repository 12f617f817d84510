#include "flowfilter/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "flowfilter/propagation.hpp"

namespace flowfilter {

Count max_objective(const CGraph& g) {
  FilterSet all = FilterSet::of(eligible_nodes(g), "all");
  return objective_f(g, all);
}

Ratio filter_ratio(const Count& f, const Count& f_max) {
  if (f_max == 0) return {1, 1};
  return {f, f_max};
}

Ratio filter_ratio(const CGraph& g, const FilterSet& filters) {
  return filter_ratio(objective_f(g, filters), max_objective(g));
}

PlacementResult evaluate_placement(const CGraph& g, const FilterSet& filters) {
  PlacementResult r;
  r.filters = filters;
  r.phi_empty = phi_total(g, FilterSet{});
  r.phi = phi_total(g, filters);
  r.f = r.phi_empty - r.phi;
  r.f_max = objective_f(g, FilterSet::of(eligible_nodes(g)), r.phi_empty);
  r.fr = filter_ratio(r.f, r.f_max);
  return r;
}

std::uint64_t subsets_up_to(std::size_t n, std::size_t k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, i)
  for (std::size_t i = 0; i <= std::min(k, n); ++i) {
    if (i > 0) {
      // binom * (n - i + 1) / i, computed without overflow where possible
      const std::uint64_t num = n - i + 1;
      if (binom > kMax / num) return kMax;
      binom = binom * num / i;
    }
    if (total > kMax - binom) return kMax;
    total += binom;
  }
  return total;
}

OracleResult oracle(const CGraph& g, std::size_t k, std::uint64_t budget) {
  const std::vector<NodeIndex> eligible = eligible_nodes(g);
  const std::size_t m = eligible.size();
  const std::size_t limit = std::min(k, m);
  const std::uint64_t needed = subsets_up_to(m, limit);
  if (needed > budget) {
    throw Error(Errc::kBudgetExceeded, "oracle needs " + std::to_string(needed) +
                                           " subset evaluations, budget is " +
                                           std::to_string(budget));
  }

  const Count phi_empty = phi_total(g, FilterSet{});
  OracleResult best;
  best.value = 0;
  best.filters.algorithm = "oracle";
  best.filters.k_requested = k;

  // Sizes ascending, each size in lexicographic order, so the first strict
  // improvement is the preferred maximizer.
  std::vector<std::size_t> pick;
  for (std::size_t size = 0; size <= limit; ++size) {
    pick.resize(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      FilterSet f;
      for (std::size_t i : pick) f.members.push_back(eligible[i]);
      Count value = objective_f(g, f, phi_empty);
      ++best.subsets_evaluated;
      if (value > best.value || best.subsets_evaluated == 1) {
        best.value = std::move(value);
        best.filters.members = f.members;
      }
      // next combination
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return best;
}

std::uint64_t trial_seed(std::uint64_t master, Algorithm algorithm, std::size_t k, std::size_t run) {
  std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                    static_cast<std::uint32_t>(algorithm), static_cast<std::uint32_t>(k),
                    static_cast<std::uint32_t>(run)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

FRRow run_cell(const CGraph& g, const FRCurveOptions& opt, Algorithm algo, std::size_t k,
               const Count& phi_empty, const Count& f_max) {
  FRRow row;
  row.algorithm = algo;
  row.k = k;
  row.f_sum = 0;
  if (is_randomized(algo)) {
    row.runs = std::max<std::size_t>(1, opt.runs);
    auto start = Clock::now();
    for (std::size_t r = 0; r < row.runs; ++r) {
      row.placements.push_back(place(g, algo, k, trial_seed(opt.seed, algo, k, r)));
    }
    if (opt.measure_time) row.wall_ms = elapsed_ms(start) / static_cast<double>(row.runs);
  } else {
    row.runs = 1;
    const int reps = opt.measure_time ? std::max(1, opt.timing_repetitions) : 1;
    std::vector<double> times;
    for (int rep = 0; rep < reps; ++rep) {
      auto start = Clock::now();
      FilterSet f = place(g, algo, k);
      times.push_back(elapsed_ms(start));
      if (rep == 0) row.placements.push_back(std::move(f));
    }
    std::sort(times.begin(), times.end());
    if (opt.measure_time) row.wall_ms = times[times.size() / 2];
  }
  for (const FilterSet& f : row.placements) row.f_sum += objective_f(g, f, phi_empty);
  row.fr = f_max == 0 ? Ratio{1, 1} : Ratio{row.f_sum, f_max * row.runs};
  return row;
}

}  // namespace

FRCurve fr_curve(const CGraph& g, const FRCurveOptions& opt) {
  const Count phi_empty = phi_total(g, FilterSet{});
  FRCurve curve;
  curve.f_max = objective_f(g, FilterSet::of(eligible_nodes(g)), phi_empty);

  struct Cell {
    Algorithm algo;
    std::size_t k;
  };
  std::vector<Cell> cells;
  for (Algorithm a : opt.algorithms) {
    for (std::size_t k = 1; k <= opt.k_max; ++k) cells.push_back({a, k});
  }
  curve.rows.resize(cells.size());

  const unsigned jobs = std::max(1u, opt.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      curve.rows[i] = run_cell(g, opt, cells[i].algo, cells[i].k, phi_empty, curve.f_max);
    }
    return curve;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(cells.size());
  {
    std::vector<std::jthread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
          try {
            curve.rows[i] = run_cell(g, opt, cells[i].algo, cells[i].k, phi_empty, curve.f_max);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return curve;
}

std::string to_csv(const FRCurve& curve) {
  std::ostringstream os;
  os << "algorithm,k,fr,runs,wall_ms\n";
  os.setf(std::ios::fixed);
  os.precision(3);
  for (const FRRow& r : curve.rows) {
    os << to_string(r.algorithm) << ',' << r.k << ',' << r.fr.to_decimal(6) << ',' << r.runs
       << ',' << r.wall_ms << '\n';
  }
  return os.str();
}

nlohmann::json count_json(const Count& c) {
  if (c >= 0 && c <= std::numeric_limits<std::uint64_t>::max()) {
    return c.convert_to<std::uint64_t>();
  }
  return c.str();
}

namespace {

nlohmann::json labels_json(const CGraph& g, const FilterSet& f) {
  nlohmann::json out = nlohmann::json::array();
  for (NodeIndex v : f.members) out.push_back(g.label(v));
  return out;
}

}  // namespace

nlohmann::json to_json(const CGraph& g, const PlacementResult& r) {
  nlohmann::json j;
  j["algorithm"] = r.filters.algorithm;
  j["k"] = r.filters.k_requested;
  j["seed"] = r.filters.seed ? nlohmann::json(*r.filters.seed) : nlohmann::json(nullptr);
  j["filters"] = labels_json(g, r.filters);
  j["phi_empty"] = count_json(r.phi_empty);
  j["phi"] = count_json(r.phi);
  j["f"] = count_json(r.f);
  j["f_max"] = count_json(r.f_max);
  j["fr"] = r.fr.to_double();
  j["fr_exact"] = r.fr.num.str() + "/" + r.fr.den.str();
  return j;
}

nlohmann::json to_json(const CGraph& g, const FRCurve& curve) {
  nlohmann::json j;
  j["f_max"] = count_json(curve.f_max);
  j["rows"] = nlohmann::json::array();
  for (const FRRow& r : curve.rows) {
    nlohmann::json row;
    row["algorithm"] = std::string(to_string(r.algorithm));
    row["k"] = r.k;
    row["fr"] = r.fr.to_decimal(6);
    row["fr_exact"] = r.fr.num.str() + "/" + r.fr.den.str();
    row["f_sum"] = count_json(r.f_sum);
    row["runs"] = r.runs;
    row["wall_ms"] = r.wall_ms;
    nlohmann::json placements = nlohmann::json::array();
    for (const FilterSet& f : r.placements) {
      nlohmann::json p;
      p["filters"] = labels_json(g, f);
      p["seed"] = f.seed ? nlohmann::json(*f.seed) : nlohmann::json(nullptr);
      placements.push_back(std::move(p));
    }
    row["placements"] = std::move(placements);
    j["rows"].push_back(std::move(row));
  }
  return j;
}

}  // namespace flowfilter
