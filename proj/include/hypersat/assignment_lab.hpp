#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypersat/formula.hpp"
#include "hypersat/subclause_space.hpp"

namespace hypersat {

// Thresholds -----------------------------------------------------------------

struct Thresholds {
  /// Sum over variables of min(|subclauses(x)|, |subclauses(-x)|).
  std::size_t minimum = 0;
  /// Sum over variables of max(|subclauses(x)|, |subclauses(-x)|).
  std::size_t maximum = 0;
  /// |union of subclauses(l)| over the per-variable argmin / argmax literals.
  /// Shared sub-clauses count once here, so these can undercut the sums.
  std::size_t minimum_dedup = 0;
  std::size_t maximum_dedup = 0;
};

Thresholds thresholds(const SubClauseSpace& space);

/// Sorted ids of sub-clauses created by the literals of `a`.
IdSet activated(const SubClauseSpace& space, const Assignment& a);

/// |activated(space, a)|.
std::size_t subclause_count(const SubClauseSpace& space, const Assignment& a);

/// subclause_count / |a|. Throws std::invalid_argument for an empty assignment.
double consumption_rate(const SubClauseSpace& space, const Assignment& a);

// Assignment generators ------------------------------------------------------

enum class Heuristic { min_create, min_create_max_solve, max_solve, max_create };

enum class TieBreak { prefer_true, prefer_false };

std::string_view to_string(Heuristic h);
std::string_view to_string(TieBreak t);
/// Accepts the camelCase names (minCreate, minCreateMaxSolve, maxSolve, maxCreate).
std::optional<Heuristic> parse_heuristic(std::string_view name);

/// One literal per variable by comparing the two polarities:
///   min_create            argmin |subclauses(l)|
///   min_create_max_solve  argmax |subsat(l)| - |subclauses(l)|
///   max_solve             argmax |subsat(l)|
///   max_create            argmax |subclauses(l)|
/// Equal scores fall to `tie`.
Assignment generate_heuristic(const SubClauseSpace& space, Heuristic h, TieBreak tie = TieBreak::prefer_true);

enum class GreedyVariant {
  /// Each variable takes the literal that appears in more clauses.
  static_count,
  /// Repeatedly fix the literal that satisfies the most still-unsatisfied
  /// clauses; ties go to `tie`, then to the lower variable index.
  dynamic_recount,
};

Assignment generate_greedy(const Formula& f, TieBreak tie = TieBreak::prefer_true,
                           GreedyVariant variant = GreedyVariant::static_count);

/// Fair coin per variable.
Assignment generate_random_assignment(std::size_t num_vars, std::uint64_t seed);

// Local search ---------------------------------------------------------------

struct WalkSatOptions {
  std::uint64_t seed = 1;
  double noise = 0.5;
  std::size_t max_flips = 1'000'000;
  std::size_t max_tries = 10;
};

struct WalkSatResult {
  std::optional<Assignment> model;
  std::size_t flips = 0;
  std::size_t tries = 0;
};

/// Incomplete search used only to obtain satisfying assignments for instances
/// too large for enumeration. A returned model is checked against `f`.
WalkSatResult walksat(const Formula& f, const WalkSatOptions& opts = {});

// Unsolved sub-clause curve ----------------------------------------------------

struct CurveStep {
  std::size_t step = 0; // 1-based
  Lit literal;
  std::size_t activated = 0;
  std::size_t satisfied = 0;
  std::size_t open = 0;
};

struct CurveSeries {
  std::vector<CurveStep> steps;
  /// 1-based step at which `open` first reaches its maximum; 0 for an empty series.
  std::size_t inflection = 0;

  std::string to_csv() const;
};

/// Assigns `order` one literal at a time. `order` must be a permutation of the
/// literals of `a`; otherwise std::invalid_argument.
CurveSeries unsolved_curve(const SubClauseSpace& space, const Assignment& a, std::span<const Lit> order);
/// Uses the assignment's own literal order.
CurveSeries unsolved_curve(const SubClauseSpace& space, const Assignment& a);

// Excluded literals ----------------------------------------------------------

struct ExclusionReport {
  IdSet unsolved;
  std::vector<Lit> excluded;
  std::vector<Lit> allowed;
};

/// Activated sub-clauses that share no literal with `a`, and the literals of `a`
/// that created them. Throws std::invalid_argument if `a` is not complete.
ExclusionReport excluded_literals(const SubClauseSpace& space, const Assignment& a);

} // namespace hypersat
