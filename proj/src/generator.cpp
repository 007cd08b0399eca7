#include "hypersat/generator.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "hypersat/random.hpp"

namespace hypersat {

namespace {

// C(n,k) * 2^k, saturating.
long double distinct_clause_capacity(std::size_t n, std::size_t k) {
  long double c = 1;
  for (std::size_t i = 0; i < k; ++i) c = c * static_cast<long double>(n - i) / static_cast<long double>(i + 1);
  return c * std::ldexp(1.0L, static_cast<int>(k));
}

} // namespace

std::size_t clause_count_for(std::size_t num_vars, double ratio) {
  if (!(ratio >= 0) || !std::isfinite(ratio)) throw std::invalid_argument("ratio must be finite and >= 0");
  return static_cast<std::size_t>(std::llround(ratio * static_cast<double>(num_vars)));
}

Formula generate_random_formula(std::size_t num_vars, double ratio, std::uint64_t seed, std::size_t width) {
  if (width == 0) throw std::invalid_argument("clause width must be positive");
  if (num_vars < width)
    throw std::invalid_argument("n = " + std::to_string(num_vars) + " is smaller than clause width " +
                                std::to_string(width));
  const std::size_t m = clause_count_for(num_vars, ratio);
  if (static_cast<long double>(m) > distinct_clause_capacity(num_vars, width))
    throw std::invalid_argument(std::to_string(m) + " clauses exceed the distinct clauses available over n = " +
                                std::to_string(num_vars));

  Rng rng(seed);
  std::set<Clause> seen;
  std::vector<Clause> clauses;
  clauses.reserve(m);
  std::vector<Lit> lits;
  while (clauses.size() < m) {
    lits.clear();
    while (lits.size() < width) {
      const auto v = static_cast<Var>(rng.below(num_vars));
      bool fresh = true;
      for (Lit l : lits) fresh = fresh && l.var() != v;
      if (fresh) lits.push_back(Lit::positive(v));
    }
    for (Lit& l : lits) l = Lit::make(l.var(), rng.coin());
    Clause c(lits);
    if (seen.insert(c).second) clauses.push_back(std::move(c));
  }
  return Formula(num_vars, width, std::move(clauses));
}

} // namespace hypersat
