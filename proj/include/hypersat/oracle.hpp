#pragma once

#include <cstdint>
#include <vector>

#include "hypersat/formula.hpp"

namespace hypersat {

inline constexpr std::size_t kExhaustiveMaxVars = 26;

struct ExhaustiveResult {
  /// Satisfying complete assignments in enumeration order, at most `cap`.
  std::vector<Assignment> models;
  /// Total satisfying assignments found over the whole enumeration.
  std::uint64_t model_count = 0;

  bool satisfiable() const { return model_count > 0; }
};

/// Enumerates all 2^n complete assignments. Enumeration order treats variable i
/// as bit i of a counter, with a set bit meaning x_i is true.
/// Throws GuardrailError when n > kExhaustiveMaxVars.
ExhaustiveResult solve_exhaustive(const Formula& f, std::size_t cap);

} // namespace hypersat
