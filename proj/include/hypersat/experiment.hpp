#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypersat/assignment_lab.hpp"

namespace hypersat {

inline constexpr std::size_t kExperimentMaxVars = 2000;
inline constexpr std::size_t kExperimentMaxInstances = 100'000;

/// Mixes an instance seed with a per-purpose salt (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

/// Assignment sources usable in experiments: the four sub-clause heuristics by
/// their camelCase names, plus "greedy", "greedy-dynamic" and "random".
bool is_known_generator(const std::string& name);
Assignment run_generator(const std::string& name, const Formula& f, const SubClauseSpace& space, TieBreak tie,
                         std::uint64_t seed);

struct InstanceRecord {
  std::size_t instance = 0;
  std::uint64_t seed = 0;
  std::string heuristic;
  double fraction = 0.0;
  std::size_t subclause_count = 0;
  std::size_t minimum_threshold = 0;
  std::size_t maximum_threshold = 0;
  std::optional<std::size_t> inflection;
};

struct Aggregate {
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0; // sample standard deviation; 0 for a single record
};

struct ExperimentSummary {
  std::size_t num_vars = 0;
  double ratio = 0.0;
  std::uint64_t seed = 0;
  std::string tie_break;
  std::vector<InstanceRecord> records;
  /// Mean / stddev of fraction satisfied, keyed by heuristic.
  std::map<std::string, Aggregate> fraction;
  std::map<std::string, Aggregate> subclause_count;

  /// Recomputes the aggregates from the records.
  void recompute();
  /// True when the stored aggregates equal a fresh recomputation.
  bool aggregates_consistent() const;

  std::string to_json(int indent = 2) const;
  std::string records_csv() const;
};

struct HeuristicExperimentConfig {
  std::size_t num_vars = 500;
  double ratio = 4.25;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::vector<std::string> heuristics{"minCreateMaxSolve", "greedy", "random"};
  TieBreak tie = TieBreak::prefer_true;
};

/// Fresh random instances with seeds seed, seed+1, ...; every heuristic is run
/// on every instance. Throws GuardrailError past the documented limits and
/// std::invalid_argument for an unknown heuristic name.
ExperimentSummary run_heuristic_experiment(const HeuristicExperimentConfig& cfg);

struct CurveExperimentConfig {
  std::size_t num_vars = 100;
  double ratio = 4.25;
  /// Satisfiable instances to collect.
  std::size_t count = 54;
  std::uint64_t seed = 1;
  /// Instances generated before giving up.
  std::size_t max_attempts = 400;
  WalkSatOptions search{.seed = 1, .noise = 0.5, .max_flips = 200'000, .max_tries = 3};
};

struct CurveRecord {
  std::size_t instance = 0;
  std::uint64_t seed = 0;
  std::size_t inflection = 0;
  std::vector<std::size_t> open;
};

struct CurveSummary {
  std::size_t num_vars = 0;
  double ratio = 0.0;
  std::string method;
  std::size_t attempted = 0;
  std::vector<CurveRecord> records;
  std::vector<double> mean_open;
  Aggregate inflection;
  /// First maximum of mean_open, 1-based.
  std::size_t mean_curve_inflection = 0;

  std::string to_json(int indent = 2) const;
  /// step,mean_open
  std::string mean_curve_csv() const;
};

/// Satisfying assignments come from WalkSAT; instances where it finds none
/// within the flip budget are skipped. Literals are assigned in variable order.
CurveSummary run_curve_experiment(const CurveExperimentConfig& cfg);

} // namespace hypersat
