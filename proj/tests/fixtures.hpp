#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hypersat/formula.hpp"
#include "hypersat/subclause_space.hpp"

namespace fixtures {

using hypersat::Assignment;
using hypersat::Clause;
using hypersat::Formula;
using hypersat::Lit;
using hypersat::SubClauseId;
using hypersat::SubClauseSpace;

inline Lit L(const char* s) { return Lit::parse(s); }

inline Clause C(std::initializer_list<const char*> lits) {
  std::vector<Lit> v;
  for (const char* s : lits) v.push_back(L(s));
  return Clause(v);
}

inline Assignment A(std::size_t n, std::initializer_list<const char*> lits) {
  std::vector<Lit> v;
  for (const char* s : lits) v.push_back(L(s));
  return Assignment(n, v);
}

// The seven-clause worked instance: every sign pattern over x0..x2 except
// (x0, x1, -x2), so its only model is {-x0, -x1, x2}.
inline Formula worked() {
  return Formula(3, 3,
                 {C({"-x0", "-x1", "-x2"}), C({"-x0", "-x1", "x2"}), C({"-x0", "x1", "-x2"}), C({"-x0", "x1", "x2"}),
                  C({"x0", "x1", "x2"}), C({"x0", "-x1", "-x2"}), C({"x0", "-x1", "x2"})});
}

// S0..S11 as enumerated for the worked instance.
inline const std::vector<std::pair<const char*, const char*>>& s_numbering() {
  static const std::vector<std::pair<const char*, const char*>> s{
      {"-x0", "-x1"}, {"-x0", "x1"}, {"-x0", "-x2"}, {"-x0", "x2"}, {"x0", "-x1"}, {"x0", "x1"},
      {"x0", "-x2"},  {"x0", "x2"},  {"-x1", "-x2"}, {"-x1", "x2"}, {"x1", "-x2"}, {"x1", "x2"}};
  return s;
}

/// Library id -> S-number, by literal pair.
inline std::size_t s_number(const SubClauseSpace& space, SubClauseId id) {
  const auto& s = s_numbering();
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto found = space.find(L(s[i].first), L(s[i].second));
    if (found && *found == id) return i;
  }
  return SIZE_MAX;
}

template <class Ids>
std::set<std::size_t> s_numbers(const SubClauseSpace& space, const Ids& ids) {
  std::set<std::size_t> out;
  for (SubClauseId id : ids) out.insert(s_number(space, id));
  return out;
}

inline SubClauseId lib_id(const SubClauseSpace& space, std::size_t s) {
  const auto& p = s_numbering().at(s);
  return *space.find(L(p.first), L(p.second));
}

// Brute-force reconstructions ---------------------------------------------------

using Pair = std::pair<Lit, Lit>;

inline Pair ordered(Lit a, Lit b) { return a.var() < b.var() ? Pair{a, b} : Pair{b, a}; }

/// Pairs produced by assigning `a`: every clause holding -a, with -a dropped.
inline std::set<Pair> created_pairs(const Formula& f, Lit a) {
  std::set<Pair> out;
  for (const Clause& c : f.clauses()) {
    if (!c.contains(~a)) continue;
    std::vector<Lit> rest;
    for (Lit l : c.lits())
      if (l != ~a) rest.push_back(l);
    out.insert(ordered(rest[0], rest[1]));
  }
  return out;
}

template <class Ids>
std::set<Pair> as_pairs(const SubClauseSpace& space, const Ids& ids) {
  std::set<Pair> out;
  for (SubClauseId id : ids) out.insert(ordered(space.at(id).first(), space.at(id).second()));
  return out;
}

inline bool clause_holds(const Clause& c, std::uint64_t mask) {
  for (Lit l : c.lits())
    if (((mask >> l.var()) & 1u) == (l.is_positive() ? 1u : 0u)) return true;
  return false;
}

/// Independent model count: plain loop over all masks.
inline std::uint64_t count_models(const Formula& f) {
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.num_vars()); ++mask) {
    bool ok = true;
    for (const Clause& c : f.clauses()) ok = ok && clause_holds(c, mask);
    count += ok;
  }
  return count;
}

inline Assignment from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Lit> lits;
  for (hypersat::Var v = 0; v < n; ++v) lits.push_back(Lit::make(v, ((mask >> v) & 1u) == 0));
  return Assignment(n, lits);
}

} // namespace fixtures
