#include "hypersat/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "hypersat/assignment_lab.hpp"
#include "hypersat/errors.hpp"
#include "hypersat/experiment.hpp"
#include "hypersat/generator.hpp"
#include "hypersat/hypernodal.hpp"
#include "hypersat/oracle.hpp"
#include "hypersat/random.hpp"
#include "hypersat/reduction.hpp"

namespace hypersat {

namespace {

constexpr std::size_t kMaxRecordedFailures = 10;

void fail(SuiteReport& r, const std::string& what) {
  ++r.falsified;
  if (r.failures.size() < kMaxRecordedFailures) r.failures.push_back(what);
}

std::size_t vars_for(const SuiteConfig& cfg, std::size_t i) {
  return cfg.min_vars + i % (cfg.max_vars - cfg.min_vars + 1);
}

std::string tag(std::size_t n, std::uint64_t seed) {
  return "n=" + std::to_string(n) + " seed=" + std::to_string(seed);
}

void check_range(const SuiteConfig& cfg, bool needs_oracle) {
  if (cfg.min_vars < 3 || cfg.min_vars > cfg.max_vars)
    throw std::invalid_argument("variable range must satisfy 3 <= min <= max");
  if (needs_oracle && cfg.max_vars > kExhaustiveMaxVars)
    throw GuardrailError("oracle-backed suites limited to n <= " + std::to_string(kExhaustiveMaxVars));
}

} // namespace

std::string SuiteReport::to_json(int indent) const {
  nlohmann::ordered_json j{{"suite", name},     {"instances", instances}, {"cases", cases},
                           {"passed", passed},  {"falsified", falsified}, {"skipped", skipped},
                           {"failures", failures}};
  return j.dump(indent);
}

SuiteReport verify_theorem_suite(const SuiteConfig& cfg) {
  check_range(cfg, true);
  SuiteReport r;
  r.name = "theorem";
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    const std::size_t n = vars_for(cfg, i);
    const std::uint64_t seed = cfg.seed + i;
    const Formula f = generate_random_formula(n, cfg.ratio, seed);
    const SubClauseSpace space(f);
    ++r.instances;
    const ExhaustiveResult models = solve_exhaustive(f, cfg.per_instance);
    if (!models.satisfiable()) ++r.skipped;
    for (const Assignment& a : models.models) {
      ++r.cases;
      const TheoremCertificate cert = verify_theorem(space, f, a);
      if (cert.holds)
        ++r.passed;
      else
        fail(r, tag(n, seed) + " A=" + a.str() + ": " + std::to_string(cert.violated.size()) + " violated clause(s)");
    }
  }
  return r;
}

SuiteReport verify_corollary1_suite(const SuiteConfig& cfg) {
  check_range(cfg, true);
  SuiteReport r;
  r.name = "corollary1";
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    const std::size_t n = vars_for(cfg, i);
    const std::uint64_t seed = cfg.seed + i;
    const Formula f = generate_random_formula(n, cfg.ratio, seed);
    const SubClauseSpace space(f);
    ++r.instances;
    std::size_t found = 0;
    for (std::size_t attempt = 0; found < cfg.per_instance && attempt < 100 * cfg.per_instance; ++attempt) {
      const Assignment a = generate_random_assignment(n, derive_seed(seed, 100 + attempt));
      const EvalReport eval = evaluate(f, a);
      if (eval.unsatisfied.empty()) continue;
      ++found;
      ++r.cases;
      const Corollary1Verdict v = verify_corollary1(space, f, a);
      // The witnesses must also be exactly the activated sub-clauses A misses.
      bool ok = v.holds;
      for (SubClauseId id : v.witnesses) {
        const SubClause& s = space.at(id);
        ok = ok && !a.contains(s.first()) && !a.contains(s.second());
      }
      if (ok)
        ++r.passed;
      else
        fail(r, tag(n, seed) + " A=" + a.str() + ": no unsatisfied activated sub-clause");
    }
    if (found < cfg.per_instance) r.skipped += cfg.per_instance - found;
  }
  return r;
}

SuiteReport verify_two_sat_suite(const SuiteConfig& cfg) {
  if (cfg.max_vars > kExhaustiveMaxVars)
    throw GuardrailError("oracle-backed suites limited to n <= " + std::to_string(kExhaustiveMaxVars));
  if (cfg.max_vars < 2) throw std::invalid_argument("2-SAT suite needs max_vars >= 2");
  SuiteReport r;
  r.name = "2sat-oracle";
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    const std::uint64_t seed = cfg.seed + i;
    Rng rng(derive_seed(seed, 7));
    const std::size_t n = 2 + rng.below(cfg.max_vars - 1);
    const std::size_t capacity = 2 * n * (n - 1);
    const double ratio = 0.5 + 0.25 * static_cast<double>(rng.below(9));
    const double capped = std::min(ratio, static_cast<double>(capacity) / static_cast<double>(n));
    const Formula f = generate_random_formula(n, capped, seed, 2);
    const TwoSatFormula t = TwoSatFormula::from_formula(f);
    ++r.instances;
    ++r.cases;
    const TwoSatResult got = solve_2sat(t);
    const ExhaustiveResult truth = solve_exhaustive(f, 0);
    bool ok = got.satisfiable == truth.satisfiable();
    if (got.satisfiable) ok = ok && got.model && satisfies(f, *got.model);
    if (!got.satisfiable) ok = ok && got.witness.has_value();
    if (ok)
      ++r.passed;
    else
      fail(r, tag(n, seed) + ": solver says " + (got.satisfiable ? "SAT" : "UNSAT") + ", enumeration says " +
                  (truth.satisfiable() ? "SAT" : "UNSAT"));
  }
  return r;
}

SuiteReport verify_sandwich_suite(const SuiteConfig& cfg) {
  check_range(cfg, false);
  SuiteReport r;
  r.name = "sandwich";
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    const std::size_t n = vars_for(cfg, i);
    const std::uint64_t seed = cfg.seed + i;
    const Formula f = generate_random_formula(n, cfg.ratio, seed);
    const SubClauseSpace space(f);
    const Thresholds th = thresholds(space);
    const Assignment a = generate_random_assignment(n, derive_seed(seed, 3));
    ++r.instances;
    ++r.cases;
    const std::size_t count = subclause_count(space, a);
    if (th.minimum <= count && count <= th.maximum)
      ++r.passed;
    else
      fail(r, tag(n, seed) + (count > th.maximum ? ": upper bound: " : ": lower bound: ") +
                  std::to_string(th.minimum) + " <= " + std::to_string(count) + " <= " + std::to_string(th.maximum) +
                  " fails");
  }
  return r;
}

SuiteReport verify_equivalence_suite(const SuiteConfig& cfg) {
  check_range(cfg, true);
  SuiteReport r;
  r.name = "equivalence";
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    const std::size_t n = vars_for(cfg, i);
    const std::uint64_t seed = cfg.seed + i;
    const Formula f = generate_random_formula(n, cfg.ratio, seed);
    const SubClauseSpace space(f);
    const HypernodalGraph hg(space);
    ++r.instances;

    Assignment a = generate_random_assignment(n, derive_seed(seed, 4));
    if (i % 2 == 0) {
      const ExhaustiveResult models = solve_exhaustive(f, 16);
      if (!models.models.empty()) a = models.models[derive_seed(seed, 5) % models.models.size()];
    }
    ++r.cases;
    const bool graph_consistent = find_contradictions(hg, a).consistent();
    const bool satisfies_reduced = assignment_satisfies_2sat(reduce(space, f, a), a).holds();
    bool all_activated_solved = true;
    for (SubClauseId id : activated(space, a)) {
      const SubClause& s = space.at(id);
      all_activated_solved = all_activated_solved && (a.contains(s.first()) || a.contains(s.second()));
    }
    const bool sat = satisfies(f, a);
    if (graph_consistent == satisfies_reduced && satisfies_reduced == all_activated_solved &&
        all_activated_solved == sat)
      ++r.passed;
    else
      fail(r, tag(n, seed) + " A=" + a.str() + ": graph=" + std::to_string(graph_consistent) +
                  " reduced=" + std::to_string(satisfies_reduced) + " activated=" +
                  std::to_string(all_activated_solved) + " formula=" + std::to_string(sat));
  }
  return r;
}

SuiteReport verify_census_suite(const SuiteConfig& cfg) {
  check_range(cfg, false);
  SuiteReport r;
  r.name = "census";
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    const std::size_t n = vars_for(cfg, i);
    const std::uint64_t seed = cfg.seed + i;
    const Formula f = generate_random_formula(n, cfg.ratio, seed);
    const SubClauseSpace space(f);
    const SpaceCensus c = space_census(space, f);
    ++r.instances;
    ++r.cases;
    if (c.actual <= std::min(c.per_clause, c.possible))
      ++r.passed;
    else
      fail(r, tag(n, seed) + ": |S|=" + std::to_string(c.actual));
  }
  return r;
}

SuiteReport verify_chain_suite(const SuiteConfig& cfg) {
  check_range(cfg, true);
  SuiteReport r;
  r.name = "chain";
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    const std::size_t n = vars_for(cfg, i);
    const std::uint64_t seed = cfg.seed + i;
    const Formula f = generate_random_formula(n, cfg.ratio, seed);
    const SubClauseSpace space(f);
    ++r.instances;
    const ExhaustiveResult models = solve_exhaustive(f, 1);
    if (!models.satisfiable()) {
      ++r.skipped;
      continue;
    }
    const Assignment& a = models.models.front();
    ++r.cases;
    const Formula two = reduce_ksat(f, a);
    const Formula one = reduce_ksat(two, a);
    bool ok = satisfies(two, a) && one.width() == 1;
    for (const Clause& c : one.clauses()) ok = ok && a.contains(c[0]);
    // Width-3 step agrees with the sub-clause reduction as a clause set.
    std::vector<Clause> via_space;
    for (const SubClause& s : reduce(space, f, a).clauses) via_space.push_back(Clause{s.first(), s.second()});
    std::vector<Clause> via_ksat(two.clauses().begin(), two.clauses().end());
    std::sort(via_space.begin(), via_space.end());
    std::sort(via_ksat.begin(), via_ksat.end());
    ok = ok && via_space == via_ksat;
    if (ok)
      ++r.passed;
    else
      fail(r, tag(n, seed) + " A=" + a.str() + ": chained reduction left a unit outside A");
  }
  return r;
}

std::vector<std::string> suite_names() {
  return {"theorem", "corollary1", "2sat-oracle", "sandwich", "equivalence", "census", "chain"};
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  static const std::map<std::string, std::function<SuiteReport(const SuiteConfig&)>> suites{
      {"theorem", verify_theorem_suite},         {"corollary1", verify_corollary1_suite},
      {"2sat-oracle", verify_two_sat_suite},     {"sandwich", verify_sandwich_suite},
      {"equivalence", verify_equivalence_suite}, {"census", verify_census_suite},
      {"chain", verify_chain_suite},
  };
  auto it = suites.find(name);
  if (it == suites.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  return it->second(cfg);
}

} // namespace hypersat
