#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hypersat {

using Var = std::uint32_t;
using ClauseId = std::uint32_t;

/// A literal over variable index `var()`. Encoded as 2*var + (1 if negated), so
/// negation is a single XOR and the 2n literals index a dense array.
class Lit {
public:
  constexpr Lit() = default;

  static constexpr Lit positive(Var v) { return Lit{v << 1}; }
  static constexpr Lit negative(Var v) { return Lit{(v << 1) | 1u}; }
  static constexpr Lit make(Var v, bool negated) { return Lit{(v << 1) | (negated ? 1u : 0u)}; }
  static constexpr Lit from_code(std::uint32_t code) { return Lit{code}; }

  /// DIMACS literal: variable v maps to index v-1, sign gives polarity.
  static Lit from_dimacs(long value);
  /// Accepts "x3", "-x3", "~x3" or a signed 1-based DIMACS integer.
  static Lit parse(std::string_view text);

  constexpr Var var() const { return code_ >> 1; }
  constexpr bool is_negated() const { return (code_ & 1u) != 0; }
  constexpr bool is_positive() const { return !is_negated(); }
  constexpr std::uint32_t code() const { return code_; }

  constexpr Lit operator~() const { return Lit{code_ ^ 1u}; }

  long to_dimacs() const { return is_negated() ? -static_cast<long>(var() + 1) : static_cast<long>(var() + 1); }
  std::string str() const;

  friend constexpr bool operator==(Lit, Lit) = default;
  friend constexpr auto operator<=>(Lit, Lit) = default;

private:
  constexpr explicit Lit(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

constexpr Lit negate(Lit l) { return ~l; }

/// Column position of a literal in the -x0, x0, -x1, x1, ... ordering.
constexpr std::size_t display_index(Lit l) { return 2 * std::size_t{l.var()} + (l.is_negated() ? 0 : 1); }

} // namespace hypersat
