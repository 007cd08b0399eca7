#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "hypersat/formula.hpp"

namespace hypersat {

struct DimacsOptions {
  /// Required clause width; 0 accepts whatever width the first clause has.
  std::size_t width = 3;
};

struct ParsedFormula {
  Formula formula;
  std::vector<std::string> warnings;
};

/// Reads "p cnf <n> <m>" followed by zero-terminated clauses. Lines starting
/// with 'c' are comments. Errors are ParseError naming the offending line.
ParsedFormula parse_dimacs(std::istream& in, const DimacsOptions& opts = {});
ParsedFormula parse_dimacs(std::string_view text, const DimacsOptions& opts = {});
ParsedFormula read_dimacs_file(const std::string& path, const DimacsOptions& opts = {});

/// Header line, then one clause per line in stored order.
std::string emit_dimacs(const Formula& f);

} // namespace hypersat
