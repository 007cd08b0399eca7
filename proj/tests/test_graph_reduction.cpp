#include <doctest.h>

#include "fixtures.hpp"
#include "hypersat/errors.hpp"
#include "hypersat/generator.hpp"
#include "hypersat/graph.hpp"
#include "hypersat/oracle.hpp"
#include "hypersat/random.hpp"
#include "hypersat/reduction.hpp"

using namespace hypersat;
using fixtures::A;
using fixtures::L;

namespace {

Digraph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i)
    edges.emplace_back(static_cast<NodeId>(rng.below(n)), static_cast<NodeId>(rng.below(n)));
  return Digraph(n, edges);
}

// Floyd-Warshall style reachability, reflexive.
std::vector<std::vector<bool>> naive_reach(const Digraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
  for (NodeId u = 0; u < n; ++u) {
    r[u][u] = true;
    for (NodeId v : g.successors(u)) r[u][v] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

std::vector<std::string> strs(const TwoSatFormula& t) {
  std::vector<std::string> out;
  for (const SubClause& s : t.clauses) out.push_back(s.str());
  return out;
}

} // namespace

TEST_SUITE("graph") {

TEST_CASE("digraph basics") {
  const std::vector<Edge> e{{0, 1}, {0, 1}, {2, 0}, {1, 2}};
  const Digraph g(3, e);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(!g.has_edge(1, 0));
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
  const std::vector<Edge> bad{{0, 5}};
  CHECK_THROWS(Digraph(3, bad));
}

TEST_CASE("closure and components agree with brute force") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t n = 1 + seed % 30;
    const Digraph g = random_graph(n, (seed % 4 + 1) * n / 2, seed);
    const auto truth = naive_reach(g);
    const Reachability r = transitive_closure(g);
    const SccResult scc = strongly_connected_components(g);
    std::size_t pairs = 0;
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = 0; v < n; ++v) {
        CHECK(r.reachable(u, v) == truth[u][v]);
        pairs += truth[u][v];
        CHECK((scc.component[u] == scc.component[v]) == (truth[u][v] && truth[v][u]));
      }
    CHECK(r.pair_count() == pairs);
    for (const Edge& e : g.edges()) CHECK(scc.component[e.first] >= scc.component[e.second]);
    std::vector<std::uint32_t> order = scc.topological_order;
    std::sort(order.begin(), order.end());
    CHECK(order.size() == scc.count);
    for (std::uint32_t i = 0; i < order.size(); ++i) CHECK(order[i] == i);
  }
}

TEST_CASE("closure guardrail") {
  CHECK_THROWS_AS(transitive_closure(Digraph(kClosureMaxNodes + 1)), GuardrailError);
}

TEST_CASE("deep chain does not overflow the stack") {
  const std::size_t n = 200000;
  std::vector<Edge> e;
  for (NodeId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(NodeId(n - 1), 0);
  CHECK(strongly_connected_components(Digraph(n, e)).count == 1);
}

} // TEST_SUITE

TEST_SUITE("reduction") {

TEST_CASE("reduction listings on the worked instance") {
  const Formula f = fixtures::worked();
  const SubClauseSpace space(f);

  const TwoSatFormula good = reduce(space, f, A(3, {"-x0", "-x1", "x2"}));
  CHECK(strs(good) == std::vector<std::string>{"(-x0 v -x1)", "(-x0 v x1)", "(-x0 v -x2)", "(-x0 v x2)",
                                               "(x0 v -x1)", "(x0 v x2)", "(-x1 v -x2)", "(-x1 v x2)",
                                               "(x1 v x2)"});
  CHECK(assignment_satisfies_2sat(good, A(3, {"-x0", "-x1", "x2"})).holds());

  const Assignment bad_a = A(3, {"-x0", "x1", "x2"});
  const TwoSatFormula bad = reduce(space, f, bad_a);
  CHECK(strs(bad) == std::vector<std::string>{"(-x0 v -x1)", "(-x0 v x1)", "(-x0 v -x2)", "(-x0 v x2)",
                                              "(x0 v -x1)", "(x0 v -x2)", "(x0 v x2)", "(-x1 v -x2)",
                                              "(-x1 v x2)", "(x1 v x2)"});
  const TwoSatCheck check = assignment_satisfies_2sat(bad, bad_a);
  std::vector<std::string> violated;
  for (std::size_t i : check.violated) violated.push_back(bad.clauses[i].str());
  CHECK(violated == std::vector<std::string>{"(x0 v -x1)", "(x0 v -x2)", "(-x1 v -x2)"});
}

TEST_CASE("provenance records creator and parent") {
  const Formula f = fixtures::worked();
  const SubClauseSpace space(f);
  const Assignment a = A(3, {"-x0", "x1", "x2"});
  const TwoSatFormula t = reduce(space, f, a);
  for (std::size_t i = 0; i < t.size(); ++i) {
    REQUIRE(!t.provenance[i].empty());
    for (const Origin& o : t.provenance[i]) {
      CHECK(a.contains(o.creator));
      const Clause& p = f.clause(o.parent);
      CHECK(p.contains(~o.creator));
      CHECK(p.contains(t.clauses[i].first()));
      CHECK(p.contains(t.clauses[i].second()));
    }
  }
}

TEST_CASE("solve_2sat matches enumeration") {
  Rng rng(11);
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const std::size_t n = 2 + rng.below(11);
    const double ratio = std::min(0.5 + 0.25 * double(rng.below(9)), double(2 * (n - 1)));
    const Formula f = generate_random_formula(n, ratio, seed, 2);
    const TwoSatResult r = solve_2sat(TwoSatFormula::from_formula(f));
    const bool truth = fixtures::count_models(f) > 0;
    REQUIRE(r.satisfiable == truth);
    if (r.satisfiable) {
      REQUIRE(r.model);
      CHECK(satisfies(f, *r.model));
    } else {
      REQUIRE(r.witness);
      const Digraph g = implication_graph(TwoSatFormula::from_formula(f));
      const Reachability reach = transitive_closure(g);
      const Lit x = Lit::positive(*r.witness);
      CHECK(reach.reachable(x.code(), (~x).code()));
      CHECK(reach.reachable((~x).code(), x.code()));
    }
  }
}

TEST_CASE("implication graph edges") {
  const TwoSatFormula t = TwoSatFormula::from_formula(Formula(2, 2, {fixtures::C({"x0", "-x1"})}));
  const Digraph g = implication_graph(t);
  CHECK(g.size() == 4);
  CHECK(g.has_edge(L("-x0").code(), L("-x1").code()));
  CHECK(g.has_edge(L("x1").code(), L("x0").code()));
  CHECK(g.edge_count() == 2);
}

TEST_CASE("theorem and corollary on random instances") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t n = 6 + seed % 7;
    const Formula f = generate_random_formula(n, 4.25, seed);
    const SubClauseSpace space(f);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); mask += 1 + mask % 7) {
      const Assignment a = fixtures::from_mask(n, mask);
      bool sat = true;
      for (const Clause& c : f.clauses()) sat = sat && fixtures::clause_holds(c, mask);
      if (sat) {
        const TheoremCertificate cert = verify_theorem(space, f, a);
        CHECK(cert.holds);
        CHECK(cert.provenance_checked >= cert.clause_count);
        CHECK_THROWS_AS(verify_corollary1(space, f, a), HypothesisError);
      } else {
        const Corollary1Verdict v = verify_corollary1(space, f, a);
        CHECK(v.holds);
        CHECK(!v.witnesses.empty());
        CHECK_THROWS_AS(verify_theorem(space, f, a), HypothesisError);
      }
    }
  }
  const SubClauseSpace space(fixtures::worked());
  CHECK_THROWS_AS(verify_theorem(space, fixtures::worked(), A(3, {"-x0"})), HypothesisError);
}

TEST_CASE("k-sat step-down chain") {
  const Formula f = fixtures::worked();
  const Assignment a = A(3, {"-x0", "-x1", "x2"});
  const Formula two = reduce_ksat(f, a);
  CHECK(two.width() == 2);
  CHECK(two.num_clauses() == 9);
  const Formula one = reduce_ksat(two, a);
  CHECK(one.width() == 1);
  for (const Clause& c : one.clauses()) CHECK(a.contains(c[0]));
  CHECK_THROWS_AS(reduce_ksat(one, a), std::invalid_argument);
}

TEST_CASE("decomposition by a partial assignment") {
  const Formula f(5, 3,
                  {fixtures::C({"x0", "x1", "x2"}), fixtures::C({"x0", "-x1", "x2"}), fixtures::C({"x3", "x4", "-x2"}),
                   fixtures::C({"-x3", "-x4", "x2"})});
  const SubClauseSpace space(f);
  const Assignment p = A(5, {"x0"});
  // x0 creates nothing (no clause holds -x0), so nothing is left unsolved.
  const Decomposition d = decompose(space, f, p);
  CHECK(d.satisfied_part == std::vector<ClauseId>{0, 1});
  CHECK(d.remaining_part == std::vector<ClauseId>{2, 3});
  CHECK(d.remaining_avoids_assigned);
  CHECK(d.literal_sets_differ);
  CHECK(d.holds());

  try {
    decompose(space, f, A(5, {"x0", "x1", "x2", "x3", "x4"}));
    FAIL("expected not-partial");
  } catch (const HypothesisError& e) {
    CHECK(e.reason() == HypothesisError::Reason::assignment_not_partial);
  }
  try {
    decompose(space, f, A(5, {"x0", "x2", "x3"}));
    FAIL("expected satisfies");
  } catch (const HypothesisError& e) {
    CHECK(e.reason() == HypothesisError::Reason::assignment_satisfies);
  }
  try {
    decompose(space, f, A(5, {"-x2"}));
    FAIL("expected activated-unsolved");
  } catch (const HypothesisError& e) {
    CHECK(e.reason() == HypothesisError::Reason::activated_unsolved);
  }
}

} // TEST_SUITE
