#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hypersat/formula.hpp"
#include "hypersat/graph.hpp"
#include "hypersat/subclause_space.hpp"

namespace hypersat {

using LitEdge = std::pair<Lit, Lit>;

/// Implication graph I_a of one literal: the owner plus the literals of the
/// sub-clauses it creates, with edges -l1 -> l2 and -l2 -> l1 per sub-clause.
struct LiteralGraph {
  Lit owner;
  /// Sorted; contains the owner.
  std::vector<Lit> nodes;
  /// Two per created sub-clause, in sub-clause id order; not deduplicated.
  std::vector<LitEdge> edges;
  IdSet subclauses;
  std::vector<SubClause> subclause_literals;

  bool has_node(Lit l) const;
};

LiteralGraph build_literal_graph(const SubClauseSpace& space, Lit owner);

/// Undirected link between equal-labeled non-owner nodes of two literal graphs.
struct CrossEdge {
  Lit label;
  Lit from_owner;
  Lit to_owner;
};

/// One literal graph per literal, indexed by literal code. Cross-edges are
/// implied by shared labels and materialized only on request.
class HypernodalGraph {
public:
  HypernodalGraph() = default;
  explicit HypernodalGraph(const SubClauseSpace& space);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t size() const { return graphs_.size(); }
  const LiteralGraph& graph(Lit owner) const { return graphs_.at(owner.code()); }
  std::span<const LiteralGraph> graphs() const { return graphs_; }

  /// For each label, the graphs holding it as a non-owner node are chained in
  /// owner order, so every pair sharing a label is connected through cross-edges.
  std::vector<CrossEdge> cross_edges() const;

private:
  std::size_t num_vars_ = 0;
  std::vector<LiteralGraph> graphs_;
};

inline HypernodalGraph build_hypernodal(const SubClauseSpace& space) { return HypernodalGraph(space); }

struct MergedGraph {
  /// Over the 2n literal nodes, node id = literal code.
  Digraph graph;
  std::vector<Lit> active;
};

/// Union of the edges of I_a for a in `a`.
MergedGraph merge_active(const HypernodalGraph& hg, const Assignment& a);

struct NegationReach {
  Lit from;    // a literal of the assignment
  Lit reached; // the negation of another literal of the assignment
};

struct ContradictionReport {
  /// Assignment literals whose negation is reachable from the assignment.
  std::vector<NegationReach> negation_reaches;
  /// Variables whose two literals share a strongly connected component.
  std::vector<Var> scc_conflicts;
  /// Implications u -> v with u assigned and v not.
  std::vector<LitEdge> escaping_edges;
  /// Activated sub-clauses owning an escaping implication.
  IdSet violated_subclauses;

  bool consistent() const {
    return negation_reaches.empty() && scc_conflicts.empty() && escaping_edges.empty();
  }
};

ContradictionReport find_contradictions(const HypernodalGraph& hg, const Assignment& a);

// Recursive literal expansion --------------------------------------------------

struct ExpansionBranch;

/// literal AND (conjunction of its created sub-clauses).
struct ExpansionNode {
  Lit literal;
  /// Set on a node at the depth bound whose created sub-clauses were not expanded.
  bool truncated = false;
  std::vector<ExpansionBranch> subclauses;
};

/// A created sub-clause: left OR right.
struct ExpansionBranch {
  SubClauseId id = 0;
  ExpansionNode left;
  ExpansionNode right;
};

struct ExpansionTree {
  ExpansionNode root;
  std::size_t depth = 0;
  std::size_t truncated_leaves = 0;
  std::size_t literal_nodes = 0;
};

inline constexpr std::size_t kExpansionMaxNodes = 2'000'000;

/// Expands literals at depth < `depth`. Throws GuardrailError if the tree would
/// exceed kExpansionMaxNodes literal nodes.
ExpansionTree expand_literal(const SubClauseSpace& space, Lit a, std::size_t depth);

/// Cuts a tree back to a smaller depth bound, re-marking truncation.
ExpansionTree restrict_depth(const ExpansionTree& tree, std::size_t depth);

bool operator==(const ExpansionNode& a, const ExpansionNode& b);
bool operator==(const ExpansionBranch& a, const ExpansionBranch& b);

/// {"depth", "truncated_leaves", "tree"}; each node is {"literal", "subclauses":
/// [[left, right], ...]} and truncated nodes carry "truncated": true.
std::string expansion_to_json(const ExpansionTree& tree, int indent = 2);

// DOT --------------------------------------------------------------------------

/// True-literal graphs in one cluster stack, false-literal graphs in another.
/// Implications solid, cross-edges dotted, containment (leaf node -> the owner
/// node of its own graph) dashed. Owner nodes are filled black.
std::string export_dot(const HypernodalGraph& hg);
std::string export_dot(const MergedGraph& merged, std::size_t num_vars);
std::string export_dot(const ExpansionTree& tree);

} // namespace hypersat
