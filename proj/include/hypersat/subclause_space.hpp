#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hypersat/formula.hpp"

namespace hypersat {

using SubClauseId = std::uint32_t;

/// Two-literal clause over distinct variables, stored in ascending variable order.
class SubClause {
public:
  SubClause(Lit a, Lit b);

  Lit first() const { return first_; }
  Lit second() const { return second_; }
  bool contains(Lit l) const { return l == first_ || l == second_; }
  /// The literal that is not `l`; `l` must be a member.
  Lit other(Lit l) const;

  std::string str() const;

  friend bool operator==(const SubClause&, const SubClause&) = default;

private:
  Lit first_;
  Lit second_;
};

/// Listing order used for sub-clause enumerations: by first literal's variable,
/// negated before positive, then likewise on the second literal. Matches the
/// S0..S11 enumeration of all pairs over three variables.
bool enumeration_less(const SubClause& a, const SubClause& b);

/// One way a sub-clause arises: assigning `creator` shrinks clause `parent`.
struct Origin {
  Lit creator;
  ClauseId parent;

  friend bool operator==(const Origin&, const Origin&) = default;
  friend auto operator<=>(const Origin&, const Origin&) = default;
};

/// Sorted, duplicate-free id list.
using IdSet = std::vector<SubClauseId>;

/// The deduplicated 2-literal sub-clauses of a width-3 formula, annotated with
/// creators and parent clauses. Ids follow first-encounter order in a scan of
/// clauses by id, removing literals in stored order.
class SubClauseSpace {
public:
  /// Throws std::invalid_argument unless the formula has width 3.
  explicit SubClauseSpace(const Formula& f);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t size() const { return subclauses_.size(); }
  const SubClause& at(SubClauseId id) const { return subclauses_.at(id); }
  std::span<const SubClause> subclauses() const { return subclauses_; }

  std::optional<SubClauseId> find(Lit a, Lit b) const;

  /// Every (creator, parent) pair, sorted.
  std::span<const Origin> origins(SubClauseId id) const { return origins_.at(id); }
  /// Sorted distinct creators of one sub-clause.
  std::span<const Lit> creators_of(SubClauseId id) const { return creators_.at(id); }
  std::span<const ClauseId> parents_of(SubClauseId id) const { return parents_.at(id); }

  /// subclauses(a): ids created when `a` is assigned, i.e. the clauses containing
  /// -a with -a removed.
  std::span<const SubClauseId> created(Lit a) const;
  /// Ids of sub-clauses that contain `a`.
  std::span<const SubClauseId> containing(Lit a) const;

private:
  std::size_t num_vars_ = 0;
  std::vector<SubClause> subclauses_;
  std::vector<std::vector<Origin>> origins_;
  std::vector<std::vector<Lit>> creators_;
  std::vector<std::vector<ClauseId>> parents_;
  std::vector<IdSet> created_;
  std::vector<IdSet> containing_;
  std::unordered_map<std::uint64_t, SubClauseId> index_;
};

std::span<const SubClauseId> subclauses_of(const SubClauseSpace& space, Lit a);

/// Sub-clauses satisfied by `a` over the whole space.
IdSet subsat(const SubClauseSpace& space, Lit a);
/// Sub-clauses satisfied by `a` among an activated set (sorted ids).
IdSet subsat(const SubClauseSpace& space, Lit a, std::span<const SubClauseId> active);

/// Units forced when `a` is assigned: the other literal of every sub-clause
/// containing -a. Sorted, distinct.
std::vector<Lit> unitclauses(const SubClauseSpace& space, Lit a);

/// Union of creators over `ids`. Throws std::out_of_range on an unknown id.
std::vector<Lit> creators(const SubClauseSpace& space, std::span<const SubClauseId> ids);
/// Union of parent clauses over `ids`. Throws std::out_of_range on an unknown id.
std::vector<ClauseId> parents(const SubClauseSpace& space, std::span<const SubClauseId> ids);

struct SpaceCensus {
  std::size_t possible = 0;   // 2n(n-1)
  std::size_t actual = 0;     // |S| after deduplication
  std::size_t per_clause = 0; // 3m
  double ratio = 0.0;         // 3r / (2(n-1))
};

/// Throws std::invalid_argument when n < 2.
SpaceCensus space_census(const SubClauseSpace& space, const Formula& f);

class InteractionMatrix {
public:
  enum class Kind : std::uint8_t { empty, created, solves, unit };

  struct Cell {
    Kind kind = Kind::empty;
    Lit unit; // meaningful when kind == unit

    friend bool operator==(const Cell&, const Cell&) = default;
  };

  explicit InteractionMatrix(const SubClauseSpace& space);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  /// Columns in -x0, x0, -x1, x1, ... order.
  Lit column_literal(std::size_t col) const;
  const Cell& cell(SubClauseId row, Lit column) const { return cells_[row * cols_ + display_index(column)]; }

  /// Header "subclause,-x0,x0,...", then rows "s<id>,..." with cells "c", "s",
  /// a signed literal for a unit, or empty.
  std::string to_csv() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cell> cells_;
};

inline InteractionMatrix interaction_matrix(const SubClauseSpace& space) { return InteractionMatrix(space); }

} // namespace hypersat
