#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypersat {

class ParseError : public std::runtime_error {
public:
  enum class Kind {
    malformed_header,
    missing_header,
    bad_token,
    clause_width,
    duplicate_literal,
    contradictory_literal,
    variable_out_of_range,
    clause_count,
    unterminated_clause,
  };

  ParseError(Kind kind, std::size_t line, const std::string& detail);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

private:
  Kind kind_;
  std::size_t line_;
};

const char* to_string(ParseError::Kind kind);

/// An assignment that holds both polarities of a variable, or names a variable
/// outside the formula.
class InconsistentAssignment : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A documented size limit (oracle enumeration, closure memory, experiment size).
class GuardrailError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The premise of a verification routine is not met. Distinct from a claim
/// being falsified, which is reported as a verdict.
class HypothesisError : public std::runtime_error {
public:
  enum class Reason {
    assignment_not_satisfying,
    assignment_satisfies,
    assignment_not_complete,
    assignment_not_partial,
    activated_unsolved,
  };

  HypothesisError(Reason reason, const std::string& detail) : std::runtime_error(detail), reason_(reason) {}

  Reason reason() const { return reason_; }

private:
  Reason reason_;
};

} // namespace hypersat
