#include "hypersat/errors.hpp"

namespace hypersat {

const char* to_string(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::malformed_header: return "malformed header";
    case ParseError::Kind::missing_header: return "missing header";
    case ParseError::Kind::bad_token: return "bad token";
    case ParseError::Kind::clause_width: return "clause width mismatch";
    case ParseError::Kind::duplicate_literal: return "duplicate literal in clause";
    case ParseError::Kind::contradictory_literal: return "contradictory literals in clause";
    case ParseError::Kind::variable_out_of_range: return "variable out of range";
    case ParseError::Kind::clause_count: return "clause count does not match header";
    case ParseError::Kind::unterminated_clause: return "unterminated clause";
  }
  return "parse error";
}

ParseError::ParseError(Kind kind, std::size_t line, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " + hypersat::to_string(kind) +
                         (detail.empty() ? "" : " (" + detail + ")")),
      kind_(kind),
      line_(line) {}

} // namespace hypersat
