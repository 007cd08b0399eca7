#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hypersat {

/// Outcome of one oracle-backed verification batch. `falsified` counts cases
/// where a checked claim failed; `skipped` counts cases whose premise did not
/// hold (e.g. an unsatisfiable instance offers no satisfying assignment).
struct SuiteReport {
  std::string name;
  std::size_t instances = 0;
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::size_t falsified = 0;
  std::size_t skipped = 0;
  /// First few falsifications, human readable.
  std::vector<std::string> failures;

  bool ok() const { return falsified == 0; }
  std::string to_json(int indent = 2) const;
};

struct SuiteConfig {
  std::size_t instances = 500;
  std::size_t min_vars = 6;
  std::size_t max_vars = 12;
  double ratio = 4.25;
  std::uint64_t seed = 1;
  /// Assignments examined per instance.
  std::size_t per_instance = 10;
};

/// Every oracle-found satisfying assignment (up to per_instance) satisfies the
/// 2-SAT formula it activates.
SuiteReport verify_theorem_suite(const SuiteConfig& cfg);
/// Random complete non-satisfying assignments always leave an activated
/// sub-clause unsatisfied.
SuiteReport verify_corollary1_suite(const SuiteConfig& cfg);
/// solve_2sat agrees with enumeration on random width-2 instances (n in
/// [2, max_vars], ratio drawn from 0.5..2.5) and its models check out.
SuiteReport verify_two_sat_suite(const SuiteConfig& cfg);
/// minimum <= subclause_count <= maximum for random (instance, complete
/// assignment) pairs; `instances` is the pair count.
SuiteReport verify_sandwich_suite(const SuiteConfig& cfg);
/// Merged-graph consistency <=> A satisfies reduce(f, A) <=> no unsatisfied
/// activated sub-clause. Half the pairs use oracle models when available.
SuiteReport verify_equivalence_suite(const SuiteConfig& cfg);
/// |S| <= min(3m, 2n(n-1)) on generated instances.
SuiteReport verify_census_suite(const SuiteConfig& cfg);
/// Chained 3 -> 2 -> 1 reduction under a satisfying assignment leaves only
/// units drawn from the assignment.
SuiteReport verify_chain_suite(const SuiteConfig& cfg);

/// theorem, corollary1, 2sat-oracle, sandwich, equivalence, census, chain.
std::vector<std::string> suite_names();
/// Throws std::invalid_argument for an unknown name, GuardrailError when
/// max_vars exceeds the enumeration limit.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

} // namespace hypersat
