#include "hypersat/formula.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "hypersat/errors.hpp"

namespace hypersat {

namespace {

struct ClauseHash {
  std::size_t operator()(const Clause& c) const {
    std::size_t h = 1469598103934665603ull;
    for (Lit l : c.lits()) h = (h ^ l.code()) * 1099511628211ull;
    return h;
  }
};

} // namespace

Clause::Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
  std::sort(lits_.begin(), lits_.end());
  for (std::size_t i = 1; i < lits_.size(); ++i) {
    if (lits_[i].var() == lits_[i - 1].var()) {
      throw std::invalid_argument(lits_[i] == lits_[i - 1] ? "duplicate literal " + lits_[i].str()
                                                           : "contradictory literals on x" +
                                                                 std::to_string(lits_[i].var()));
    }
  }
}

bool Clause::contains(Lit l) const { return std::binary_search(lits_.begin(), lits_.end(), l); }

Clause Clause::without(Lit l) const {
  if (!contains(l)) throw std::invalid_argument(l.str() + " not in clause " + str());
  std::vector<Lit> rest;
  rest.reserve(lits_.size() - 1);
  for (Lit x : lits_)
    if (x != l) rest.push_back(x);
  return Clause(std::move(rest));
}

std::string Clause::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < lits_.size(); ++i) {
    if (i) out += " v ";
    out += lits_[i].str();
  }
  return out + ")";
}

Formula::Formula(std::size_t num_vars, std::size_t width, std::vector<Clause> clauses)
    : num_vars_(num_vars), width_(width), clauses_(std::move(clauses)), occurs_(2 * num_vars) {
  std::unordered_set<Clause, ClauseHash> seen;
  for (std::size_t id = 0; id < clauses_.size(); ++id) {
    const Clause& c = clauses_[id];
    if (c.width() != width_) {
      throw std::invalid_argument("clause " + std::to_string(id) + " has width " + std::to_string(c.width()) +
                                  ", expected " + std::to_string(width_));
    }
    for (Lit l : c.lits()) {
      if (l.var() >= num_vars_) throw std::invalid_argument("clause " + std::to_string(id) + " names " + l.str() +
                                                            " but n = " + std::to_string(num_vars_));
      occurs_[l.code()].push_back(static_cast<ClauseId>(id));
    }
    if (!seen.insert(c).second) ++duplicates_;
  }
}

double Formula::ratio() const {
  return num_vars_ == 0 ? 0.0 : static_cast<double>(clauses_.size()) / static_cast<double>(num_vars_);
}

std::span<const ClauseId> Formula::occurrences(Lit l) const {
  if (l.var() >= num_vars_) throw std::out_of_range(l.str() + " outside formula with n = " + std::to_string(num_vars_));
  return occurs_[l.code()];
}

Assignment::Assignment(std::size_t num_vars, std::span<const Lit> lits) : values_(num_vars, 0) {
  lits_.reserve(lits.size());
  for (Lit l : lits) {
    if (l.var() >= num_vars)
      throw InconsistentAssignment(l.str() + " outside formula with n = " + std::to_string(num_vars));
    const std::int8_t v = l.is_negated() ? -1 : 1;
    if (values_[l.var()] == v) continue;
    if (values_[l.var()] != 0)
      throw InconsistentAssignment("assignment contains both x" + std::to_string(l.var()) + " and -x" +
                                   std::to_string(l.var()));
    values_[l.var()] = v;
    lits_.push_back(l);
  }
}

Assignment Assignment::from_values(std::span<const bool> values) {
  std::vector<Lit> lits;
  lits.reserve(values.size());
  for (std::size_t v = 0; v < values.size(); ++v) lits.push_back(Lit::make(static_cast<Var>(v), !values[v]));
  return Assignment(values.size(), lits);
}

Assignment Assignment::from_values(const std::vector<bool>& values) {
  std::vector<Lit> lits;
  lits.reserve(values.size());
  for (std::size_t v = 0; v < values.size(); ++v) lits.push_back(Lit::make(static_cast<Var>(v), !values[v]));
  return Assignment(values.size(), lits);
}

bool Assignment::contains(Lit l) const {
  if (l.var() >= values_.size()) return false;
  return values_[l.var()] == (l.is_negated() ? -1 : 1);
}

std::vector<Lit> Assignment::sorted() const {
  std::vector<Lit> out = lits_;
  std::sort(out.begin(), out.end());
  return out;
}

std::string Assignment::str() const {
  std::string out = "{";
  bool first = true;
  for (Lit l : sorted()) {
    if (!first) out += ", ";
    out += l.str();
    first = false;
  }
  return out + "}";
}

std::vector<ClauseId> satisfied(const Formula& f, Lit l) {
  auto occ = f.occurrences(l);
  return {occ.begin(), occ.end()};
}

bool clause_satisfied(const Clause& c, const Assignment& a) {
  return std::any_of(c.lits().begin(), c.lits().end(), [&](Lit l) { return a.contains(l); });
}

EvalReport evaluate(const Formula& f, const Assignment& a) {
  if (a.num_vars() != f.num_vars())
    throw InconsistentAssignment("assignment over " + std::to_string(a.num_vars()) + " variables, formula has " +
                                 std::to_string(f.num_vars()));
  EvalReport report;
  for (std::size_t id = 0; id < f.num_clauses(); ++id) {
    if (clause_satisfied(f.clause(static_cast<ClauseId>(id)), a))
      ++report.satisfied;
    else
      report.unsatisfied.push_back(static_cast<ClauseId>(id));
  }
  report.fraction = f.num_clauses() == 0 ? 1.0
                                         : static_cast<double>(report.satisfied) /
                                               static_cast<double>(f.num_clauses());
  return report;
}

bool satisfies(const Formula& f, const Assignment& a) {
  return std::all_of(f.clauses().begin(), f.clauses().end(), [&](const Clause& c) { return clause_satisfied(c, a); });
}

} // namespace hypersat
