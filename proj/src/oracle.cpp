#include "hypersat/oracle.hpp"

#include <string>

#include "hypersat/errors.hpp"

namespace hypersat {

ExhaustiveResult solve_exhaustive(const Formula& f, std::size_t cap) {
  const std::size_t n = f.num_vars();
  if (n > kExhaustiveMaxVars)
    throw GuardrailError("exhaustive enumeration limited to n <= " + std::to_string(kExhaustiveMaxVars) + ", got " +
                         std::to_string(n));

  // A clause is falsified exactly when (bits & mask) == falsifying.
  struct Packed {
    std::uint32_t mask = 0;
    std::uint32_t falsifying = 0;
  };
  std::vector<Packed> packed;
  packed.reserve(f.num_clauses());
  for (const Clause& c : f.clauses()) {
    Packed p;
    for (Lit l : c.lits()) {
      p.mask |= 1u << l.var();
      if (l.is_negated()) p.falsifying |= 1u << l.var();
    }
    packed.push_back(p);
  }

  ExhaustiveResult result;
  const std::uint64_t total = std::uint64_t{1} << n;
  bool values[kExhaustiveMaxVars] = {};
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const auto b = static_cast<std::uint32_t>(bits);
    bool ok = true;
    for (const Packed& p : packed) {
      if ((b & p.mask) == p.falsifying) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    ++result.model_count;
    if (result.models.size() < cap) {
      for (std::size_t v = 0; v < n; ++v) values[v] = (b >> v) & 1u;
      result.models.push_back(Assignment::from_values(std::span<const bool>(values, n)));
    }
  }
  return result;
}

} // namespace hypersat
