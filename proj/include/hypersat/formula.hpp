#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hypersat/literal.hpp"

namespace hypersat {

/// Disjunction of distinct, non-contradictory literals, kept sorted by variable
/// index so that two clauses are equal iff their literal sets are equal.
class Clause {
public:
  Clause() = default;
  /// Throws std::invalid_argument on a repeated variable.
  explicit Clause(std::vector<Lit> lits);
  Clause(std::initializer_list<Lit> lits) : Clause(std::vector<Lit>(lits)) {}

  std::span<const Lit> lits() const { return lits_; }
  std::size_t width() const { return lits_.size(); }
  bool contains(Lit l) const;
  Lit operator[](std::size_t i) const { return lits_[i]; }

  /// Copy with `l` removed; `l` must be present.
  Clause without(Lit l) const;

  std::string str() const;

  friend bool operator==(const Clause&, const Clause&) = default;
  friend auto operator<=>(const Clause&, const Clause&) = default;

private:
  std::vector<Lit> lits_;
};

/// CNF over n variables with a fixed clause width. Immutable once built.
class Formula {
public:
  Formula() = default;
  /// Validates widths and variable ranges; duplicate clauses are kept but counted.
  Formula(std::size_t num_vars, std::size_t width, std::vector<Clause> clauses);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t num_clauses() const { return clauses_.size(); }
  std::size_t width() const { return width_; }
  double ratio() const;

  std::span<const Clause> clauses() const { return clauses_; }
  const Clause& clause(ClauseId id) const { return clauses_.at(id); }

  /// Ids of clauses containing `l`, ascending.
  std::span<const ClauseId> occurrences(Lit l) const;

  std::size_t duplicate_clauses() const { return duplicates_; }

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.num_vars_ == b.num_vars_ && a.width_ == b.width_ && a.clauses_ == b.clauses_;
  }

private:
  std::size_t num_vars_ = 0;
  std::size_t width_ = 3;
  std::vector<Clause> clauses_;
  std::vector<std::vector<ClauseId>> occurs_;
  std::size_t duplicates_ = 0;
};

/// Consistent set of literals over a formula's variables. Construction rejects
/// contradictory pairs; repeated literals collapse. Literal order is preserved
/// as given, which is the order used for curves.
class Assignment {
public:
  Assignment() = default;
  Assignment(std::size_t num_vars, std::span<const Lit> lits);
  Assignment(std::size_t num_vars, std::initializer_list<Lit> lits)
      : Assignment(num_vars, std::span<const Lit>(lits.begin(), lits.size())) {}

  /// Builds a complete assignment from one boolean per variable (true = x_i).
  static Assignment from_values(std::span<const bool> values);
  static Assignment from_values(const std::vector<bool>& values);

  std::size_t num_vars() const { return values_.size(); }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  bool complete() const { return lits_.size() == values_.size(); }

  bool contains(Lit l) const;
  bool assigns(Var v) const { return v < values_.size() && values_[v] != 0; }

  std::span<const Lit> lits() const { return lits_; }
  /// Literals sorted by variable index.
  std::vector<Lit> sorted() const;

  std::string str() const;

  friend bool operator==(const Assignment& a, const Assignment& b) { return a.values_ == b.values_; }

private:
  std::vector<Lit> lits_;
  std::vector<std::int8_t> values_; // 0 unassigned, +1 positive, -1 negated
};

struct EvalReport {
  std::size_t satisfied = 0;
  std::vector<ClauseId> unsatisfied;
  double fraction = 1.0;
};

/// Ids of clauses containing `l`. Throws std::out_of_range for a foreign variable.
std::vector<ClauseId> satisfied(const Formula& f, Lit l);

bool clause_satisfied(const Clause& c, const Assignment& a);

EvalReport evaluate(const Formula& f, const Assignment& a);

bool satisfies(const Formula& f, const Assignment& a);

} // namespace hypersat
