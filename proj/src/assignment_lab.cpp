#include "hypersat/assignment_lab.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "hypersat/random.hpp"

namespace hypersat {

Thresholds thresholds(const SubClauseSpace& space) {
  Thresholds t;
  std::vector<bool> min_seen(space.size()), max_seen(space.size());
  for (Var v = 0; v < space.num_vars(); ++v) {
    auto pos = space.created(Lit::positive(v));
    auto neg = space.created(Lit::negative(v));
    const bool pos_smaller = pos.size() <= neg.size();
    t.minimum += std::min(pos.size(), neg.size());
    t.maximum += std::max(pos.size(), neg.size());
    for (SubClauseId id : pos_smaller ? pos : neg) {
      if (!min_seen[id]) ++t.minimum_dedup;
      min_seen[id] = true;
    }
    for (SubClauseId id : pos_smaller ? neg : pos) {
      if (!max_seen[id]) ++t.maximum_dedup;
      max_seen[id] = true;
    }
  }
  return t;
}

IdSet activated(const SubClauseSpace& space, const Assignment& a) {
  IdSet out;
  for (Lit l : a.lits()) {
    auto ids = space.created(l);
    out.insert(out.end(), ids.begin(), ids.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t subclause_count(const SubClauseSpace& space, const Assignment& a) { return activated(space, a).size(); }

double consumption_rate(const SubClauseSpace& space, const Assignment& a) {
  if (a.empty()) throw std::invalid_argument("consumption rate of an empty assignment is undefined");
  return static_cast<double>(subclause_count(space, a)) / static_cast<double>(a.size());
}

std::string_view to_string(Heuristic h) {
  switch (h) {
    case Heuristic::min_create: return "minCreate";
    case Heuristic::min_create_max_solve: return "minCreateMaxSolve";
    case Heuristic::max_solve: return "maxSolve";
    case Heuristic::max_create: return "maxCreate";
  }
  return "?";
}

std::string_view to_string(TieBreak t) { return t == TieBreak::prefer_true ? "prefer-true" : "prefer-false"; }

std::optional<Heuristic> parse_heuristic(std::string_view name) {
  for (Heuristic h : {Heuristic::min_create, Heuristic::min_create_max_solve, Heuristic::max_solve,
                      Heuristic::max_create})
    if (name == to_string(h)) return h;
  return std::nullopt;
}

namespace {

Lit pick(Var v, long long pos_score, long long neg_score, TieBreak tie) {
  if (pos_score != neg_score) return Lit::make(v, neg_score > pos_score);
  return Lit::make(v, tie == TieBreak::prefer_false);
}

} // namespace

Assignment generate_heuristic(const SubClauseSpace& space, Heuristic h, TieBreak tie) {
  std::vector<Lit> lits;
  lits.reserve(space.num_vars());
  auto score = [&](Lit l) -> long long {
    const auto created = static_cast<long long>(space.created(l).size());
    const auto solved = static_cast<long long>(space.containing(l).size());
    switch (h) {
      case Heuristic::min_create: return -created;
      case Heuristic::min_create_max_solve: return solved - created;
      case Heuristic::max_solve: return solved;
      case Heuristic::max_create: return created;
    }
    return 0;
  };
  for (Var v = 0; v < space.num_vars(); ++v) lits.push_back(pick(v, score(Lit::positive(v)), score(Lit::negative(v)), tie));
  return Assignment(space.num_vars(), lits);
}

Assignment generate_greedy(const Formula& f, TieBreak tie, GreedyVariant variant) {
  const std::size_t n = f.num_vars();
  std::vector<Lit> lits;
  lits.reserve(n);
  if (variant == GreedyVariant::static_count) {
    for (Var v = 0; v < n; ++v) {
      const auto pos = static_cast<long long>(f.occurrences(Lit::positive(v)).size());
      const auto neg = static_cast<long long>(f.occurrences(Lit::negative(v)).size());
      lits.push_back(pick(v, pos, neg, tie));
    }
    return Assignment(n, lits);
  }

  std::vector<long long> count(2 * n);
  for (std::size_t code = 0; code < 2 * n; ++code)
    count[code] = static_cast<long long>(f.occurrences(Lit::from_code(static_cast<std::uint32_t>(code))).size());
  std::vector<bool> done(f.num_clauses()), fixed(n);
  const bool want_negated = tie == TieBreak::prefer_false;
  for (std::size_t step = 0; step < n; ++step) {
    // key: (count, preferred polarity, lower variable)
    std::tuple<long long, int, long long> best_key{-1, -1, 0};
    Lit best;
    for (Var v = 0; v < n; ++v) {
      if (fixed[v]) continue;
      for (bool negated : {false, true}) {
        const Lit l = Lit::make(v, negated);
        std::tuple<long long, int, long long> key{count[l.code()], negated == want_negated ? 1 : 0,
                                                  -static_cast<long long>(v)};
        if (key > best_key) {
          best_key = key;
          best = l;
        }
      }
    }
    fixed[best.var()] = true;
    lits.push_back(best);
    for (ClauseId cid : f.occurrences(best)) {
      if (done[cid]) continue;
      done[cid] = true;
      for (Lit l : f.clause(cid).lits()) --count[l.code()];
    }
  }
  return Assignment(n, lits);
}

Assignment generate_random_assignment(std::size_t num_vars, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Lit> lits;
  lits.reserve(num_vars);
  for (Var v = 0; v < num_vars; ++v) lits.push_back(Lit::make(v, rng.coin()));
  return Assignment(num_vars, lits);
}

WalkSatResult walksat(const Formula& f, const WalkSatOptions& opts) {
  const std::size_t n = f.num_vars();
  const std::size_t m = f.num_clauses();
  Rng rng(opts.seed);
  WalkSatResult result;
  std::vector<bool> value(n);
  std::vector<std::uint32_t> true_count(m);
  std::vector<std::size_t> unsat, where(m);
  auto lit_true = [&](Lit l) { return value[l.var()] != l.is_negated(); };
  auto add_unsat = [&](std::size_t c) {
    where[c] = unsat.size();
    unsat.push_back(c);
  };
  auto remove_unsat = [&](std::size_t c) {
    const std::size_t last = unsat.back();
    unsat[where[c]] = last;
    where[last] = where[c];
    unsat.pop_back();
  };
  auto break_count = [&](Var v) {
    const Lit now_true = Lit::make(v, !value[v]);
    std::size_t b = 0;
    for (ClauseId c : f.occurrences(now_true)) b += true_count[c] == 1;
    return b;
  };

  for (std::size_t attempt = 0; attempt < opts.max_tries; ++attempt) {
    ++result.tries;
    for (std::size_t v = 0; v < n; ++v) value[v] = rng.coin();
    unsat.clear();
    for (std::size_t c = 0; c < m; ++c) {
      true_count[c] = 0;
      for (Lit l : f.clause(static_cast<ClauseId>(c)).lits()) true_count[c] += lit_true(l);
      if (true_count[c] == 0) add_unsat(c);
    }
    for (std::size_t flip = 0; flip < opts.max_flips && !unsat.empty(); ++flip) {
      const Clause& c = f.clause(static_cast<ClauseId>(unsat[rng.below(unsat.size())]));
      Var chosen = c[0].var();
      std::size_t best = SIZE_MAX, ties = 0;
      for (Lit l : c.lits()) {
        const std::size_t b = break_count(l.var());
        if (b < best) {
          best = b;
          chosen = l.var();
          ties = 1;
        } else if (b == best && rng.below(++ties) == 0) {
          chosen = l.var();
        }
      }
      if (best > 0 && rng.unit() < opts.noise) chosen = c[rng.below(c.width())].var();

      const Lit was_true = Lit::make(chosen, !value[chosen]);
      value[chosen] = !value[chosen];
      ++result.flips;
      for (ClauseId cid : f.occurrences(was_true))
        if (--true_count[cid] == 0) add_unsat(cid);
      for (ClauseId cid : f.occurrences(~was_true))
        if (true_count[cid]++ == 0) remove_unsat(cid);
    }
    if (unsat.empty()) {
      Assignment model = Assignment::from_values(value);
      if (!satisfies(f, model)) throw std::logic_error("walksat produced a non-model");
      result.model = std::move(model);
      return result;
    }
  }
  return result;
}

std::string CurveSeries::to_csv() const {
  std::string out = "step,literal,activated,satisfied,open\n";
  for (const CurveStep& s : steps)
    out += std::to_string(s.step) + "," + s.literal.str() + "," + std::to_string(s.activated) + "," +
           std::to_string(s.satisfied) + "," + std::to_string(s.open) + "\n";
  return out;
}

CurveSeries unsolved_curve(const SubClauseSpace& space, const Assignment& a, std::span<const Lit> order) {
  if (order.size() != a.size()) throw std::invalid_argument("curve order is not a permutation of the assignment");
  {
    std::vector<Lit> sorted_order(order.begin(), order.end());
    std::sort(sorted_order.begin(), sorted_order.end());
    if (sorted_order != a.sorted()) throw std::invalid_argument("curve order is not a permutation of the assignment");
  }

  std::vector<bool> is_active(space.size()), hit(space.size());
  CurveSeries series;
  std::size_t active_count = 0, satisfied_count = 0, peak = 0;
  for (std::size_t t = 0; t < order.size(); ++t) {
    const Lit l = order[t];
    for (SubClauseId id : space.containing(l)) {
      if (hit[id]) continue;
      hit[id] = true;
      if (is_active[id]) ++satisfied_count;
    }
    for (SubClauseId id : space.created(l)) {
      if (is_active[id]) continue;
      is_active[id] = true;
      ++active_count;
      if (hit[id]) ++satisfied_count;
    }
    const std::size_t open = active_count - satisfied_count;
    series.steps.push_back(CurveStep{t + 1, l, active_count, satisfied_count, open});
    if (t == 0 || open > peak) {
      peak = open;
      series.inflection = t + 1;
    }
  }
  return series;
}

CurveSeries unsolved_curve(const SubClauseSpace& space, const Assignment& a) {
  return unsolved_curve(space, a, a.lits());
}

ExclusionReport excluded_literals(const SubClauseSpace& space, const Assignment& a) {
  if (!a.complete()) throw std::invalid_argument("excluded literals need a complete assignment");
  ExclusionReport report;
  for (SubClauseId id : activated(space, a)) {
    const SubClause& s = space.at(id);
    if (!a.contains(s.first()) && !a.contains(s.second())) report.unsolved.push_back(id);
  }
  std::vector<Lit> excluded;
  for (Lit c : creators(space, report.unsolved))
    if (a.contains(c)) excluded.push_back(c);
  report.excluded = excluded;
  for (Lit l : a.sorted())
    if (!std::binary_search(excluded.begin(), excluded.end(), l)) report.allowed.push_back(l);
  return report;
}

} // namespace hypersat
