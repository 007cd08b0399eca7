#include "hypersat/reduction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hypersat/assignment_lab.hpp"
#include "hypersat/errors.hpp"

namespace hypersat {

namespace {

void require_matching(const Formula& f, const Assignment& a) {
  if (a.num_vars() != f.num_vars())
    throw InconsistentAssignment("assignment over " + std::to_string(a.num_vars()) + " variables, formula has " +
                                 std::to_string(f.num_vars()));
}

std::vector<Lit> literal_closure(const Formula& f, std::span<const ClauseId> ids) {
  std::vector<Lit> out;
  for (ClauseId id : ids)
    for (Lit l : f.clause(id).lits()) {
      out.push_back(l);
      out.push_back(~l);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace

Formula TwoSatFormula::to_formula() const {
  std::vector<Clause> out;
  out.reserve(clauses.size());
  for (const SubClause& s : clauses) out.push_back(Clause{s.first(), s.second()});
  return Formula(num_vars, 2, std::move(out));
}

TwoSatFormula TwoSatFormula::from_formula(const Formula& f) {
  if (f.width() != 2 && f.num_clauses() > 0) throw std::invalid_argument("expected a width-2 formula");
  TwoSatFormula t;
  t.num_vars = f.num_vars();
  for (const Clause& c : f.clauses()) {
    SubClause s(c[0], c[1]);
    if (std::find(t.clauses.begin(), t.clauses.end(), s) == t.clauses.end()) t.clauses.push_back(s);
  }
  std::sort(t.clauses.begin(), t.clauses.end(), enumeration_less);
  t.provenance.resize(t.clauses.size());
  return t;
}

TwoSatFormula reduce(const SubClauseSpace& space, const Formula& f, const Assignment& a) {
  require_matching(f, a);
  IdSet ids = activated(space, a);
  std::sort(ids.begin(), ids.end(),
            [&](SubClauseId x, SubClauseId y) { return enumeration_less(space.at(x), space.at(y)); });
  TwoSatFormula t;
  t.num_vars = f.num_vars();
  for (SubClauseId id : ids) {
    t.clauses.push_back(space.at(id));
    auto& prov = t.provenance.emplace_back();
    for (const Origin& o : space.origins(id))
      if (a.contains(o.creator)) prov.push_back(o);
  }
  return t;
}

Formula reduce_ksat(const Formula& f, const Assignment& a) {
  require_matching(f, a);
  if (f.width() < 2) throw std::invalid_argument("reduction needs clause width >= 2");
  std::set<Clause> seen;
  std::vector<Clause> out;
  for (Lit l : a.lits()) {
    for (ClauseId id : f.occurrences(~l)) {
      Clause reduced = f.clause(id).without(~l);
      if (seen.insert(reduced).second) out.push_back(std::move(reduced));
    }
  }
  return Formula(f.num_vars(), f.width() - 1, std::move(out));
}

Digraph implication_graph(const TwoSatFormula& t) {
  std::vector<Edge> edges;
  edges.reserve(2 * t.clauses.size());
  for (const SubClause& s : t.clauses) {
    edges.emplace_back((~s.first()).code(), s.second().code());
    edges.emplace_back((~s.second()).code(), s.first().code());
  }
  return Digraph(2 * t.num_vars, edges);
}

TwoSatResult solve_2sat(const TwoSatFormula& t) {
  const Digraph g = implication_graph(t);
  const SccResult scc = strongly_connected_components(g);
  TwoSatResult result;
  for (Var v = 0; v < t.num_vars; ++v) {
    if (scc.component[Lit::positive(v).code()] == scc.component[Lit::negative(v).code()]) {
      result.witness = v;
      return result;
    }
  }
  // A literal whose component finishes first (lower id, closer to the sinks)
  // is set true.
  std::vector<bool> values(t.num_vars);
  for (Var v = 0; v < t.num_vars; ++v)
    values[v] = scc.component[Lit::positive(v).code()] < scc.component[Lit::negative(v).code()];
  Assignment model = Assignment::from_values(values);
  if (!assignment_satisfies_2sat(t, model).holds()) throw std::logic_error("2-SAT model failed verification");
  result.satisfiable = true;
  result.model = std::move(model);
  return result;
}

TwoSatCheck assignment_satisfies_2sat(const TwoSatFormula& t, const Assignment& a) {
  TwoSatCheck check;
  for (std::size_t i = 0; i < t.clauses.size(); ++i)
    if (!a.contains(t.clauses[i].first()) && !a.contains(t.clauses[i].second())) check.violated.push_back(i);
  return check;
}

TheoremCertificate verify_theorem(const SubClauseSpace& space, const Formula& f, const Assignment& a) {
  require_matching(f, a);
  if (!a.complete())
    throw HypothesisError(HypothesisError::Reason::assignment_not_complete, "assignment is not complete");
  if (!satisfies(f, a))
    throw HypothesisError(HypothesisError::Reason::assignment_not_satisfying,
                          "assignment " + a.str() + " does not satisfy the formula");
  const TwoSatFormula t = reduce(space, f, a);
  TheoremCertificate cert;
  cert.clause_count = t.size();
  bool sound = true;
  for (std::size_t i = 0; i < t.size(); ++i) {
    sound = sound && !t.provenance[i].empty();
    for (const Origin& o : t.provenance[i]) {
      const Clause& parent = f.clause(o.parent);
      const bool ok = a.contains(o.creator) && parent.contains(~o.creator) &&
                      parent.without(~o.creator) == Clause{t.clauses[i].first(), t.clauses[i].second()};
      sound = sound && ok;
      cert.provenance_checked += ok;
    }
  }
  cert.violated = assignment_satisfies_2sat(t, a).violated;
  cert.holds = sound && cert.violated.empty();
  return cert;
}

Corollary1Verdict verify_corollary1(const SubClauseSpace& space, const Formula& f, const Assignment& a) {
  require_matching(f, a);
  if (!a.complete())
    throw HypothesisError(HypothesisError::Reason::assignment_not_complete, "assignment is not complete");
  if (satisfies(f, a))
    throw HypothesisError(HypothesisError::Reason::assignment_satisfies,
                          "assignment " + a.str() + " satisfies the formula");
  Corollary1Verdict verdict;
  for (SubClauseId id : activated(space, a)) {
    const SubClause& s = space.at(id);
    if (!a.contains(s.first()) && !a.contains(s.second())) verdict.witnesses.push_back(id);
  }
  verdict.holds = !verdict.witnesses.empty();
  return verdict;
}

Decomposition decompose(const SubClauseSpace& space, const Formula& f, const Assignment& partial) {
  require_matching(f, partial);
  if (partial.size() >= f.num_vars())
    throw HypothesisError(HypothesisError::Reason::assignment_not_partial,
                          "assignment has " + std::to_string(partial.size()) + " literals; needs fewer than n = " +
                              std::to_string(f.num_vars()));
  if (satisfies(f, partial))
    throw HypothesisError(HypothesisError::Reason::assignment_satisfies, "partial assignment satisfies the formula");
  const IdSet active = activated(space, partial);
  for (SubClauseId id : active) {
    const SubClause& s = space.at(id);
    if (!partial.contains(s.first()) && !partial.contains(s.second()))
      throw HypothesisError(HypothesisError::Reason::activated_unsolved,
                            "activated sub-clause " + s.str() + " is not satisfied");
  }

  std::vector<bool> in_first(f.num_clauses(), false);
  for (ClauseId id : parents(space, active)) in_first[id] = true;
  for (ClauseId id = 0; id < f.num_clauses(); ++id)
    if (clause_satisfied(f.clause(id), partial)) in_first[id] = true;

  Decomposition d;
  for (ClauseId id = 0; id < f.num_clauses(); ++id) (in_first[id] ? d.satisfied_part : d.remaining_part).push_back(id);
  d.satisfied_literals = literal_closure(f, d.satisfied_part);
  d.remaining_literals = literal_closure(f, d.remaining_part);
  d.remaining_avoids_assigned = true;
  for (ClauseId id : d.remaining_part)
    for (Lit l : f.clause(id).lits())
      if (partial.assigns(l.var())) d.remaining_avoids_assigned = false;
  d.literal_sets_differ = d.satisfied_literals != d.remaining_literals;
  return d;
}

} // namespace hypersat
