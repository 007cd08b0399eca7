#include <doctest.h>

#include "fixtures.hpp"
#include "hypersat/generator.hpp"

using namespace hypersat;
using fixtures::L;
using S = std::set<std::size_t>;

TEST_SUITE("subclause_space") {

TEST_CASE("worked instance enumerates all twelve pairs") {
  const Formula f = fixtures::worked();
  const SubClauseSpace space(f);
  REQUIRE(space.size() == 12);
  S all;
  for (SubClauseId id = 0; id < space.size(); ++id) all.insert(fixtures::s_number(space, id));
  CHECK(all == S{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});

  // The S-numbering is exactly the enumeration order.
  std::vector<SubClause> subs(space.subclauses().begin(), space.subclauses().end());
  std::sort(subs.begin(), subs.end(), enumeration_less);
  for (std::size_t i = 0; i < subs.size(); ++i) CHECK(fixtures::s_number(space, *space.find(subs[i].first(), subs[i].second())) == i);
}

TEST_CASE("worked instance created sets") {
  const SubClauseSpace space(fixtures::worked());
  auto created = [&](const char* l) { return fixtures::s_numbers(space, space.created(L(l))); };
  CHECK(created("-x0") == S{8, 9, 11});
  CHECK(created("x0") == S{8, 9, 10, 11});
  CHECK(created("-x1") == S{2, 3, 7});
  CHECK(created("x1") == S{2, 3, 6, 7});
  CHECK(created("-x2") == S{0, 1, 4, 5});
  CHECK(created("x2") == S{0, 1, 4});
  CHECK(fixtures::s_numbers(space, subclauses_of(space, L("x2"))) == S{0, 1, 4});
}

TEST_CASE("worked instance subsat, units, creators, parents") {
  const SubClauseSpace space(fixtures::worked());
  CHECK(fixtures::s_numbers(space, subsat(space, L("-x0"))) == S{0, 1, 2, 3});
  CHECK(fixtures::s_numbers(space, subsat(space, L("x2"))) == S{3, 7, 9, 11});
  for (Var v = 0; v < 3; ++v) {
    CHECK(subsat(space, Lit::positive(v)).size() == 4);
    CHECK(subsat(space, Lit::negative(v)).size() == 4);
  }

  const std::vector<Lit> units = unitclauses(space, L("x0"));
  CHECK(units == std::vector<Lit>{L("x1"), L("-x1"), L("x2"), L("-x2")});

  const SubClauseId s8 = fixtures::lib_id(space, 8);
  const SubClauseId s4 = fixtures::lib_id(space, 4);
  CHECK(std::vector<Lit>(space.creators_of(s8).begin(), space.creators_of(s8).end()) ==
        std::vector<Lit>{L("x0"), L("-x0")});
  CHECK(std::vector<ClauseId>(space.parents_of(s8).begin(), space.parents_of(s8).end()) ==
        std::vector<ClauseId>{0, 5});
  // S4 = (x0 v -x1) arises from both C5 and C6.
  CHECK(std::vector<ClauseId>(space.parents_of(s4).begin(), space.parents_of(s4).end()) ==
        std::vector<ClauseId>{5, 6});
  CHECK(space.origins(s4).size() == 2);

  std::vector<SubClauseId> all(space.size());
  for (SubClauseId i = 0; i < all.size(); ++i) all[i] = i;
  CHECK(creators(space, all).size() == 6);
  CHECK(parents(space, all).size() == 7);
  const std::vector<SubClauseId> bad{99};
  CHECK_THROWS_AS(creators(space, bad), std::out_of_range);
  CHECK_THROWS_AS(parents(space, bad), std::out_of_range);
}

TEST_CASE("restricted subsat only sees the active set") {
  const SubClauseSpace space(fixtures::worked());
  const std::vector<SubClauseId> active{fixtures::lib_id(space, 3), fixtures::lib_id(space, 8)};
  std::vector<SubClauseId> sorted = active;
  std::sort(sorted.begin(), sorted.end());
  CHECK(fixtures::s_numbers(space, subsat(space, L("-x0"), sorted)) == S{3});
  CHECK(fixtures::s_numbers(space, subsat(space, L("-x1"), sorted)) == S{8});
}

TEST_CASE("census") {
  const Formula f = fixtures::worked();
  const SpaceCensus c = space_census(SubClauseSpace(f), f);
  CHECK(c.possible == 12);
  CHECK(c.actual == 12);
  CHECK(c.per_clause == 21);
  CHECK(c.ratio == doctest::Approx(21.0 / 12));
  const Formula tiny(1, 3, {});
  CHECK_THROWS_AS(space_census(SubClauseSpace(tiny), tiny), std::invalid_argument);
}

TEST_CASE("empty formula gives an empty space") {
  const Formula f(4, 3, {});
  const SubClauseSpace space(f);
  CHECK(space.size() == 0);
  CHECK(space.created(L("x3")).empty());
  CHECK_THROWS_AS(SubClauseSpace(Formula(3, 2, {fixtures::C({"x0", "x1"})})), std::invalid_argument);
}

TEST_CASE("created sets match a reconstruction from parent clauses") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t n = 4 + seed % 20;
    const Formula f = generate_random_formula(n, 4.25, seed);
    const SubClauseSpace space(f);
    std::set<fixtures::Pair> every;
    for (Var v = 0; v < n; ++v)
      for (Lit a : {Lit::positive(v), Lit::negative(v)}) {
        const auto expect = fixtures::created_pairs(f, a);
        CHECK(fixtures::as_pairs(space, space.created(a)) == expect);
        every.insert(expect.begin(), expect.end());
        for (SubClauseId id : space.created(a)) {
          // a is a creator, and each parent holds -a plus the pair.
          auto cr = space.creators_of(id);
          CHECK(std::find(cr.begin(), cr.end(), a) != cr.end());
        }
        for (SubClauseId id : space.containing(a)) CHECK(space.at(id).contains(a));
      }
    CHECK(every.size() == space.size());

    for (SubClauseId id = 0; id < space.size(); ++id)
      for (const Origin& o : space.origins(id)) {
        const Clause& parent = f.clause(o.parent);
        CHECK(parent.contains(~o.creator));
        CHECK(parent.contains(space.at(id).first()));
        CHECK(parent.contains(space.at(id).second()));
      }

    const SpaceCensus c = space_census(space, f);
    CHECK(c.actual <= std::min(c.per_clause, c.possible));
  }
}

TEST_CASE("interaction matrix row") {
  const SubClauseSpace space(fixtures::worked());
  const InteractionMatrix m = interaction_matrix(space);
  CHECK(m.rows() == 12);
  CHECK(m.cols() == 6);
  CHECK(m.column_literal(0) == L("-x0"));
  CHECK(m.column_literal(5) == L("x2"));
  using K = InteractionMatrix::Kind;
  const SubClauseId s8 = fixtures::lib_id(space, 8); // (-x1 v -x2)
  CHECK(m.cell(s8, L("x0")).kind == K::created);
  CHECK(m.cell(s8, L("-x0")).kind == K::created);
  CHECK(m.cell(s8, L("-x1")).kind == K::solves);
  CHECK(m.cell(s8, L("-x2")).kind == K::solves);
  CHECK(m.cell(s8, L("x1")).kind == K::unit);
  CHECK(m.cell(s8, L("x1")).unit == L("-x2"));
  CHECK(m.cell(s8, L("x2")).kind == K::unit);
  CHECK(m.cell(s8, L("x2")).unit == L("-x1"));

  const std::string csv = m.to_csv();
  CHECK(csv.rfind("subclause,-x0,x0,-x1,x1,-x2,x2\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 13);
  CHECK(csv.find("s" + std::to_string(s8) + ",c,c,s,-x2,s,-x1\n") != std::string::npos);
}

TEST_CASE("interaction matrix on a four-variable key example") {
  // s0 = (x2 v -x3), created by -x0 and -x1.
  const Formula f(4, 3, {fixtures::C({"x0", "x2", "-x3"}), fixtures::C({"x1", "x2", "-x3"})});
  const SubClauseSpace space(f);
  const InteractionMatrix m(space);
  const SubClauseId s0 = *space.find(L("x2"), L("-x3"));
  using K = InteractionMatrix::Kind;
  CHECK(m.cell(s0, L("-x0")).kind == K::created);
  CHECK(m.cell(s0, L("-x1")).kind == K::created);
  CHECK(m.cell(s0, L("-x2")).kind == K::unit);
  CHECK(m.cell(s0, L("-x2")).unit == L("-x3"));
  CHECK(m.cell(s0, L("x2")).kind == K::solves);
  CHECK(m.cell(s0, L("-x3")).kind == K::solves);
  CHECK(m.cell(s0, L("x3")).kind == K::unit);
  CHECK(m.cell(s0, L("x3")).unit == L("x2"));
  CHECK(m.cell(s0, L("x0")).kind == K::empty);
}

} // TEST_SUITE
