#include <doctest.h>

#include "fixtures.hpp"
#include "hypersat/assignment_lab.hpp"
#include "hypersat/generator.hpp"
#include "hypersat/oracle.hpp"

using namespace hypersat;
using fixtures::A;
using fixtures::L;
using S = std::set<std::size_t>;

namespace {

std::vector<std::string> strs(std::span<const Lit> lits) {
  std::vector<std::string> out;
  for (Lit l : lits) out.push_back(l.str());
  return out;
}

} // namespace

TEST_SUITE("assignment_lab") {

TEST_CASE("worked instance thresholds and counts") {
  const SubClauseSpace space(fixtures::worked());
  const Thresholds t = thresholds(space);
  CHECK(t.minimum == 9);
  CHECK(t.maximum == 12);
  CHECK(t.minimum_dedup <= t.minimum);
  CHECK(t.maximum_dedup <= t.maximum);

  const Assignment sat = A(3, {"-x0", "-x1", "x2"});
  CHECK(fixtures::s_numbers(space, activated(space, sat)) == S{0, 1, 2, 3, 4, 7, 8, 9, 11});
  CHECK(subclause_count(space, sat) == 9);
  CHECK(consumption_rate(space, sat) == doctest::Approx(3.0));

  const Assignment unsat = A(3, {"-x0", "x1", "x2"});
  CHECK(fixtures::s_numbers(space, activated(space, unsat)) == S{0, 1, 2, 3, 4, 6, 7, 8, 9, 11});
  CHECK(subclause_count(space, unsat) == 10);

  CHECK(subclause_count(space, Assignment(3, std::span<const Lit>{})) == 0);
  CHECK_THROWS_AS(consumption_rate(space, Assignment(3, std::span<const Lit>{})), std::invalid_argument);
  CHECK(consumption_rate(space, A(3, {"x0"})) == doctest::Approx(4.0));
}

TEST_CASE("balanced literals give equal thresholds") {
  // Each variable's two literals create one sub-clause apiece.
  const Formula f(4, 3, {fixtures::C({"x0", "x1", "x2"}), fixtures::C({"-x0", "-x1", "-x2"})});
  const Thresholds t = thresholds(SubClauseSpace(f));
  CHECK(t.minimum == t.maximum);
}

TEST_CASE("sandwich upper bound holds and the lower bound follows per-literal sums") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const std::size_t n = 6 + seed % 7;
    const Formula f = generate_random_formula(n, 4.25, seed);
    const SubClauseSpace space(f);
    const Thresholds t = thresholds(space);
    CHECK(t.minimum <= t.maximum);
    const Assignment a = generate_random_assignment(n, seed * 31);
    std::size_t summed = 0;
    for (Lit l : a.lits()) summed += space.created(l).size();
    CHECK(subclause_count(space, a) <= t.maximum);
    CHECK(t.minimum <= summed);
    CHECK(summed <= t.maximum);
  }
}

TEST_CASE("union count can undercut the minimum threshold") {
  // -x0 and -x1 both create (x2 v x3); every variable's smaller side creates one
  // sub-clause, so minimum = 4 while this assignment activates only 3.
  const Formula f(4, 3,
                  {fixtures::C({"x0", "x2", "x3"}), fixtures::C({"x1", "x2", "x3"}), fixtures::C({"-x0", "x2", "-x3"}),
                   fixtures::C({"-x1", "-x2", "x3"})});
  const SubClauseSpace space(f);
  CHECK(thresholds(space).minimum == 4);
  CHECK(subclause_count(space, A(4, {"-x0", "-x1", "x2", "x3"})) == 3);
}

TEST_CASE("heuristics on the worked instance") {
  const Formula f = fixtures::worked();
  const SubClauseSpace space(f);
  CHECK(generate_heuristic(space, Heuristic::min_create) == A(3, {"-x0", "-x1", "x2"}));
  CHECK(generate_heuristic(space, Heuristic::max_create) == A(3, {"x0", "x1", "-x2"}));
  CHECK(generate_heuristic(space, Heuristic::max_solve) == A(3, {"x0", "x1", "x2"}));
  CHECK(generate_heuristic(space, Heuristic::max_solve, TieBreak::prefer_false) == A(3, {"-x0", "-x1", "-x2"}));
  // subsat is 4 everywhere, so this reduces to minCreate.
  CHECK(generate_heuristic(space, Heuristic::min_create_max_solve) == A(3, {"-x0", "-x1", "x2"}));
  CHECK(satisfies(f, generate_heuristic(space, Heuristic::min_create)));
  CHECK(!satisfies(f, generate_heuristic(space, Heuristic::max_solve)));

  CHECK(parse_heuristic("minCreateMaxSolve") == Heuristic::min_create_max_solve);
  CHECK(!parse_heuristic("minSolve"));
  CHECK(to_string(Heuristic::max_create) == "maxCreate");
}

TEST_CASE("heuristic choices match a per-variable scan") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Formula f = generate_random_formula(40, 4.25, seed);
    const SubClauseSpace space(f);
    const Assignment mc = generate_heuristic(space, Heuristic::min_create);
    const Assignment mcms = generate_heuristic(space, Heuristic::min_create_max_solve);
    CHECK(mc.complete());
    for (Var v = 0; v < 40; ++v) {
      const auto cp = long(space.created(Lit::positive(v)).size()), cn = long(space.created(Lit::negative(v)).size());
      const auto sp = long(subsat(space, Lit::positive(v)).size()), sn = long(subsat(space, Lit::negative(v)).size());
      CHECK(mc.contains(Lit::make(v, cn < cp)));
      CHECK(mcms.contains(Lit::make(v, sn - cn > sp - cp)));
    }
  }
}

TEST_CASE("greedy variants") {
  const Formula f = fixtures::worked();
  // x0: 3 vs 4 occurrences, x1: 3 vs 4, x2: 4 vs 3.
  CHECK(generate_greedy(f) == A(3, {"-x0", "-x1", "x2"}));
  const Assignment d = generate_greedy(f, TieBreak::prefer_true, GreedyVariant::dynamic_recount);
  CHECK(d.complete());
  CHECK(satisfies(f, d));

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Formula g = generate_random_formula(60, 4.25, seed);
    const double st = evaluate(g, generate_greedy(g)).fraction;
    const double dy = evaluate(g, generate_greedy(g, TieBreak::prefer_true, GreedyVariant::dynamic_recount)).fraction;
    CHECK(st > 0.85);
    CHECK(dy > 0.9);
  }
}

TEST_CASE("random assignments are reproducible and balanced") {
  CHECK(generate_random_assignment(50, 3) == generate_random_assignment(50, 3));
  CHECK(!(generate_random_assignment(50, 3) == generate_random_assignment(50, 4)));
  std::size_t pos = 0;
  for (std::uint64_t s = 0; s < 100; ++s)
    for (Lit l : generate_random_assignment(100, s).lits()) pos += l.is_positive();
  CHECK(double(pos) / 10000 == doctest::Approx(0.5).epsilon(0.03));
}

TEST_CASE("unsolved curve on the worked instance") {
  const SubClauseSpace space(fixtures::worked());
  const Assignment a = A(3, {"-x0", "-x1", "x2"});
  const CurveSeries c = unsolved_curve(space, a);
  REQUIRE(c.steps.size() == 3);
  CHECK(c.steps[0].open == 3);
  CHECK(c.steps[1].open == 2);
  CHECK(c.steps[2].open == 0);
  CHECK(c.inflection == 1);
  CHECK(c.steps[2].activated == 9);
  CHECK(c.steps[2].satisfied == 9);
  CHECK(c.to_csv().rfind("step,literal,activated,satisfied,open\n1,-x0,3,0,3\n", 0) == 0);

  const std::vector<Lit> bad{L("-x0"), L("x2")};
  CHECK_THROWS_AS(unsolved_curve(space, a, bad), std::invalid_argument);
  const std::vector<Lit> other{L("x2"), L("-x1"), L("-x0")};
  CHECK(unsolved_curve(space, a, other).steps.back().open == 0);
}

TEST_CASE("curve invariants against a direct recount") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const std::size_t n = 8 + seed % 5;
    const Formula f = generate_random_formula(n, 4.25, seed);
    const SubClauseSpace space(f);
    const ExhaustiveResult models = solve_exhaustive(f, 1);
    const Assignment a = models.satisfiable() ? models.models[0] : generate_random_assignment(n, seed);
    const CurveSeries c = unsolved_curve(space, a);
    std::set<fixtures::Pair> act;
    std::set<Lit> assigned;
    std::size_t peak = 0;
    for (const CurveStep& s : c.steps) {
      assigned.insert(s.literal);
      const auto made = fixtures::created_pairs(f, s.literal);
      act.insert(made.begin(), made.end());
      std::size_t sat = 0;
      for (const auto& p : act) sat += assigned.count(p.first) || assigned.count(p.second);
      CHECK(s.activated == act.size());
      CHECK(s.satisfied == sat);
      CHECK(s.open == act.size() - sat);
      peak = std::max(peak, s.open);
    }
    CHECK(c.steps[c.inflection - 1].open == peak);
    for (std::size_t i = 0; i + 1 < c.inflection; ++i) CHECK(c.steps[i].open < peak);
    if (models.satisfiable()) CHECK(c.steps.back().open == 0);
  }
}

TEST_CASE("excluded literals") {
  const SubClauseSpace space(fixtures::worked());
  const ExclusionReport r = excluded_literals(space, A(3, {"-x0", "x1", "x2"}));
  CHECK(fixtures::s_numbers(space, r.unsolved) == S{4, 6, 8});
  std::vector<std::string> ex = strs(r.excluded);
  std::sort(ex.begin(), ex.end());
  CHECK(ex == std::vector<std::string>{"-x0", "x1", "x2"});
  CHECK(r.allowed.empty());

  const ExclusionReport ok = excluded_literals(space, A(3, {"-x0", "-x1", "x2"}));
  CHECK(ok.unsolved.empty());
  CHECK(ok.excluded.empty());
  CHECK(ok.allowed.size() == 3);
  CHECK_THROWS_AS(excluded_literals(space, A(3, {"x0"})), std::invalid_argument);

  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Formula f = generate_random_formula(10, 4.25, seed);
    const SubClauseSpace sp(f);
    const Assignment a = generate_random_assignment(10, seed);
    const ExclusionReport e = excluded_literals(sp, a);
    for (Lit l : e.excluded) {
      CHECK(a.contains(l));
      bool creates_unsolved = false;
      for (SubClauseId id : sp.created(l))
        creates_unsolved = creates_unsolved || std::binary_search(e.unsolved.begin(), e.unsolved.end(), id);
      CHECK(creates_unsolved);
    }
    CHECK(e.excluded.size() + e.allowed.size() == a.size());
    CHECK(e.unsolved.empty() == satisfies(f, a));
  }
}

TEST_CASE("walksat returns verified models") {
  std::size_t found = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Formula f = generate_random_formula(50, 3.5, seed);
    const WalkSatResult r = walksat(f, {.seed = seed});
    if (r.model) {
      ++found;
      CHECK(satisfies(f, *r.model));
      CHECK(r.model->complete());
    }
  }
  CHECK(found >= 9);
  // Unsatisfiable: all eight sign patterns over three variables.
  std::vector<Clause> all;
  for (int m = 0; m < 8; ++m)
    all.push_back(Clause{Lit::make(0, m & 1), Lit::make(1, m & 2), Lit::make(2, m & 4)});
  const WalkSatResult none = walksat(Formula(3, 3, all), {.max_flips = 1000, .max_tries = 2});
  CHECK(!none.model);
}

} // TEST_SUITE
