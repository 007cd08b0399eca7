#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypersat/formula.hpp"
#include "hypersat/graph.hpp"
#include "hypersat/subclause_space.hpp"

namespace hypersat {

/// The 2-SAT formula an assignment activates. Clauses are distinct and listed in
/// enumeration order; provenance keeps every (creator, parent) pair that
/// produced each clause under the assignment.
struct TwoSatFormula {
  std::size_t num_vars = 0;
  std::vector<SubClause> clauses;
  std::vector<std::vector<Origin>> provenance;

  std::size_t size() const { return clauses.size(); }
  bool empty() const { return clauses.empty(); }

  /// Width-2 CNF view, for DIMACS output.
  Formula to_formula() const;
  /// Wraps a width-2 formula (no provenance); repeated clauses collapse.
  static TwoSatFormula from_formula(const Formula& f);
};

/// Union of subclauses(a) over a in `a`, with provenance.
TwoSatFormula reduce(const SubClauseSpace& space, const Formula& f, const Assignment& a);

/// For every literal l of `a` and every clause containing -l, emit the clause
/// without -l. Result has width k-1 and no repeated clauses, in first-emitted
/// order. Throws std::invalid_argument for width < 2.
Formula reduce_ksat(const Formula& f, const Assignment& a);

/// Node l.code() per literal; edges -l1 -> l2 and -l2 -> l1 for each clause.
Digraph implication_graph(const TwoSatFormula& t);

struct TwoSatResult {
  bool satisfiable = false;
  std::optional<Assignment> model;
  /// A variable whose two literals share a strongly connected component.
  std::optional<Var> witness;
};

/// Implication graph + SCC decision procedure. A returned model has been
/// checked against every clause.
TwoSatResult solve_2sat(const TwoSatFormula& t);

struct TwoSatCheck {
  /// Indices into t.clauses that share no literal with the assignment.
  std::vector<std::size_t> violated;

  bool holds() const { return violated.empty(); }
};

TwoSatCheck assignment_satisfies_2sat(const TwoSatFormula& t, const Assignment& a);

struct TheoremCertificate {
  bool holds = false;
  std::size_t clause_count = 0;
  /// (creator, parent) pairs confirmed as parent == clause + {-creator}.
  std::size_t provenance_checked = 0;
  std::vector<std::size_t> violated;
};

/// Checks that a satisfying complete assignment satisfies the 2-SAT formula it
/// activates. Throws HypothesisError when `a` is not complete or does not
/// satisfy `f`; a falsified claim comes back as holds == false.
TheoremCertificate verify_theorem(const SubClauseSpace& space, const Formula& f, const Assignment& a);

struct Corollary1Verdict {
  bool holds = false;
  /// Activated sub-clauses sharing no literal with the assignment.
  IdSet witnesses;
};

/// For a complete consistent non-satisfying assignment, finds activated
/// sub-clauses it leaves unsatisfied. Throws HypothesisError when `a` is
/// incomplete or satisfies `f`.
Corollary1Verdict verify_corollary1(const SubClauseSpace& space, const Formula& f, const Assignment& a);

struct Decomposition {
  std::vector<ClauseId> satisfied_part;   // C1
  std::vector<ClauseId> remaining_part;   // C2
  std::vector<Lit> satisfied_literals;    // L1: literals of C1 and their negations
  std::vector<Lit> remaining_literals;    // L2
  bool remaining_avoids_assigned = false; // no C2 literal's variable is assigned by P
  bool literal_sets_differ = false;       // L1 != L2

  bool holds() const { return remaining_avoids_assigned && literal_sets_differ; }
};

/// Splits f by a partial assignment that satisfies all of its activated
/// sub-clauses but not f. Throws HypothesisError (with a distinct reason) when
/// P is not partial, leaves an activated sub-clause unsolved, or satisfies f.
Decomposition decompose(const SubClauseSpace& space, const Formula& f, const Assignment& partial);

} // namespace hypersat
