#include "hypersat/literal.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace hypersat {

Lit Lit::from_dimacs(long value) {
  if (value == 0) throw std::invalid_argument("DIMACS literal 0 is the clause terminator");
  const long v = value < 0 ? -value : value;
  return make(static_cast<Var>(v - 1), value < 0);
}

Lit Lit::parse(std::string_view text) {
  auto fail = [&] { return std::invalid_argument("bad literal '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();
  bool negated = false;
  if (text.front() == '-' || text.front() == '~') {
    negated = true;
    text.remove_prefix(1);
  } else if (text.front() == '+') {
    text.remove_prefix(1);
  }
  const bool named = !text.empty() && (text.front() == 'x' || text.front() == 'X');
  if (named) text.remove_prefix(1);
  long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty() || value < 0) throw fail();
  if (named) return make(static_cast<Var>(value), negated);
  if (value == 0) throw fail();
  return make(static_cast<Var>(value - 1), negated);
}

std::string Lit::str() const { return (is_negated() ? "-x" : "x") + std::to_string(var()); }

} // namespace hypersat
