#pragma once

#include <cstdint>

#include "hypersat/formula.hpp"

namespace hypersat {

/// Number of clauses produced for n variables at ratio r: round(r * n).
std::size_t clause_count_for(std::size_t num_vars, double ratio);

/// Uniform random k-SAT. Each clause takes k distinct variables uniformly and an
/// independent fair polarity per literal; repeated clauses are redrawn.
/// Throws std::invalid_argument when n < k or when round(r*n) exceeds the
/// number of distinct clauses C(n,k) * 2^k.
Formula generate_random_formula(std::size_t num_vars, double ratio, std::uint64_t seed, std::size_t width = 3);

} // namespace hypersat
