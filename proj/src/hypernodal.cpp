#include "hypersat/hypernodal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include <json.hpp>

#include "hypersat/errors.hpp"

namespace hypersat {

bool LiteralGraph::has_node(Lit l) const { return std::binary_search(nodes.begin(), nodes.end(), l); }

LiteralGraph build_literal_graph(const SubClauseSpace& space, Lit owner) {
  LiteralGraph g;
  g.owner = owner;
  g.nodes.push_back(owner);
  for (SubClauseId id : space.created(owner)) {
    const SubClause& s = space.at(id);
    g.subclauses.push_back(id);
    g.subclause_literals.push_back(s);
    g.nodes.push_back(s.first());
    g.nodes.push_back(s.second());
    g.edges.emplace_back(~s.first(), s.second());
    g.edges.emplace_back(~s.second(), s.first());
  }
  std::sort(g.nodes.begin(), g.nodes.end());
  g.nodes.erase(std::unique(g.nodes.begin(), g.nodes.end()), g.nodes.end());
  return g;
}

HypernodalGraph::HypernodalGraph(const SubClauseSpace& space) : num_vars_(space.num_vars()) {
  graphs_.reserve(2 * num_vars_);
  for (std::uint32_t code = 0; code < 2 * num_vars_; ++code)
    graphs_.push_back(build_literal_graph(space, Lit::from_code(code)));
}

std::vector<CrossEdge> HypernodalGraph::cross_edges() const {
  std::vector<std::vector<Lit>> holders(graphs_.size());
  for (const LiteralGraph& g : graphs_)
    for (Lit l : g.nodes)
      if (l != g.owner) holders[l.code()].push_back(g.owner);
  std::vector<CrossEdge> out;
  for (std::uint32_t code = 0; code < holders.size(); ++code)
    for (std::size_t i = 1; i < holders[code].size(); ++i)
      out.push_back(CrossEdge{Lit::from_code(code), holders[code][i - 1], holders[code][i]});
  return out;
}

MergedGraph merge_active(const HypernodalGraph& hg, const Assignment& a) {
  if (a.num_vars() != hg.num_vars())
    throw InconsistentAssignment("assignment over " + std::to_string(a.num_vars()) + " variables, family has " +
                                 std::to_string(hg.num_vars()));
  std::vector<Edge> edges;
  for (Lit l : a.lits())
    for (auto [u, v] : hg.graph(l).edges) edges.emplace_back(u.code(), v.code());
  MergedGraph merged{Digraph(2 * hg.num_vars(), edges), a.sorted()};
  return merged;
}

ContradictionReport find_contradictions(const HypernodalGraph& hg, const Assignment& a) {
  const MergedGraph merged = merge_active(hg, a);
  const Digraph& g = merged.graph;
  ContradictionReport report;

  constexpr std::uint32_t none = UINT32_MAX;
  std::vector<std::uint32_t> origin(g.size(), none);
  std::deque<NodeId> queue;
  for (Lit l : merged.active) {
    origin[l.code()] = l.code();
    queue.push_back(l.code());
  }
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : g.successors(u)) {
      if (origin[v] != none) continue;
      origin[v] = origin[u];
      queue.push_back(v);
    }
  }
  for (Lit l : merged.active)
    if (origin[(~l).code()] != none) report.negation_reaches.push_back({Lit::from_code(origin[(~l).code()]), ~l});

  const SccResult scc = strongly_connected_components(g);
  for (Var v = 0; v < hg.num_vars(); ++v)
    if (scc.component[Lit::positive(v).code()] == scc.component[Lit::negative(v).code()])
      report.scc_conflicts.push_back(v);

  for (Lit l : merged.active)
    for (NodeId v : g.successors(l.code()))
      if (!a.contains(Lit::from_code(v))) report.escaping_edges.emplace_back(l, Lit::from_code(v));

  auto escapes = [&](Lit u, Lit v) { return a.contains(u) && !a.contains(v); };
  for (Lit l : merged.active) {
    const LiteralGraph& lg = hg.graph(l);
    for (std::size_t i = 0; i < lg.subclauses.size(); ++i) {
      const SubClause& s = lg.subclause_literals[i];
      if (escapes(~s.first(), s.second()) || escapes(~s.second(), s.first()))
        report.violated_subclauses.push_back(lg.subclauses[i]);
    }
  }
  std::sort(report.violated_subclauses.begin(), report.violated_subclauses.end());
  report.violated_subclauses.erase(std::unique(report.violated_subclauses.begin(), report.violated_subclauses.end()),
                                   report.violated_subclauses.end());
  return report;
}

// Expansion ------------------------------------------------------------------

namespace {

struct Expander {
  const SubClauseSpace& space;
  std::size_t depth;
  ExpansionTree& tree;

  void expand(ExpansionNode& node, std::size_t level) {
    if (++tree.literal_nodes > kExpansionMaxNodes)
      throw GuardrailError("expansion exceeds " + std::to_string(kExpansionMaxNodes) + " literal nodes");
    auto created = space.created(node.literal);
    if (level == depth) {
      node.truncated = !created.empty();
      tree.truncated_leaves += node.truncated;
      return;
    }
    node.subclauses.reserve(created.size());
    for (SubClauseId id : created) {
      ExpansionBranch& b = node.subclauses.emplace_back();
      b.id = id;
      b.left.literal = space.at(id).first();
      b.right.literal = space.at(id).second();
      expand(b.left, level + 1);
      expand(b.right, level + 1);
    }
  }
};

void restrict_node(ExpansionNode& node, std::size_t level, std::size_t depth, ExpansionTree& tree) {
  ++tree.literal_nodes;
  if (level == depth) {
    node.truncated = node.truncated || !node.subclauses.empty();
    node.subclauses.clear();
  }
  tree.truncated_leaves += node.truncated;
  for (ExpansionBranch& b : node.subclauses) {
    restrict_node(b.left, level + 1, depth, tree);
    restrict_node(b.right, level + 1, depth, tree);
  }
}

nlohmann::ordered_json node_json(const ExpansionNode& node) {
  nlohmann::ordered_json j;
  j["literal"] = node.literal.str();
  if (node.truncated) j["truncated"] = true;
  j["subclauses"] = nlohmann::ordered_json::array();
  for (const ExpansionBranch& b : node.subclauses)
    j["subclauses"].push_back(nlohmann::ordered_json::array({node_json(b.left), node_json(b.right)}));
  return j;
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

std::string leaf_id(Lit owner, Lit label) { return quote(owner.str() + "|" + label.str()); }

} // namespace

ExpansionTree expand_literal(const SubClauseSpace& space, Lit a, std::size_t depth) {
  ExpansionTree tree;
  tree.depth = depth;
  tree.root.literal = a;
  Expander{space, depth, tree}.expand(tree.root, 0);
  return tree;
}

ExpansionTree restrict_depth(const ExpansionTree& tree, std::size_t depth) {
  if (depth >= tree.depth) return tree;
  ExpansionTree out;
  out.depth = depth;
  out.root = tree.root;
  restrict_node(out.root, 0, depth, out);
  return out;
}

bool operator==(const ExpansionNode& a, const ExpansionNode& b) {
  return a.literal == b.literal && a.truncated == b.truncated && a.subclauses == b.subclauses;
}

bool operator==(const ExpansionBranch& a, const ExpansionBranch& b) {
  return a.id == b.id && a.left == b.left && a.right == b.right;
}

std::string expansion_to_json(const ExpansionTree& tree, int indent) {
  nlohmann::ordered_json j;
  j["depth"] = tree.depth;
  j["truncated_leaves"] = tree.truncated_leaves;
  j["literal_nodes"] = tree.literal_nodes;
  j["tree"] = node_json(tree.root);
  return j.dump(indent);
}

// DOT ----------------------------------------------------------------------------

std::string export_dot(const HypernodalGraph& hg) {
  std::string out = "digraph hypernodal {\n  compound=true;\n  node [shape=circle];\n";
  for (bool negated : {false, true}) {
    out += std::string("  subgraph cluster_") + (negated ? "false" : "true") + " {\n";
    out += std::string("    label=\"") + (negated ? "false literals" : "true literals") + "\";\n";
    for (Var v = 0; v < hg.num_vars(); ++v) {
      const LiteralGraph& g = hg.graph(Lit::make(v, negated));
      const std::string name = g.owner.str();
      out += "    subgraph " + quote("cluster_I_" + name) + " {\n";
      out += "      label=" + quote("I(" + name + ")") + ";\n";
      out += "      " + quote(name) + " [style=filled, fillcolor=black, fontcolor=white];\n";
      for (Lit l : g.nodes)
        if (l != g.owner) out += "      " + leaf_id(g.owner, l) + " [label=" + quote(l.str()) + "];\n";
      for (auto [u, w] : g.edges) out += "      " + leaf_id(g.owner, u) + " -> " + leaf_id(g.owner, w) + ";\n";
      out += "    }\n";
    }
    out += "  }\n";
  }
  for (const LiteralGraph& g : hg.graphs())
    for (Lit l : g.nodes)
      if (l != g.owner) out += "  " + leaf_id(g.owner, l) + " -> " + quote(l.str()) + " [style=dashed, dir=none];\n";
  for (const CrossEdge& e : hg.cross_edges())
    out += "  " + leaf_id(e.from_owner, e.label) + " -> " + leaf_id(e.to_owner, e.label) +
           " [style=dotted, dir=none];\n";
  out += "}\n";
  return out;
}

std::string export_dot(const MergedGraph& merged, std::size_t num_vars) {
  std::string out = "digraph merged {\n  node [shape=circle];\n";
  for (std::uint32_t code = 0; code < 2 * num_vars; ++code) {
    const Lit l = Lit::from_code(code);
    const bool active = std::binary_search(merged.active.begin(), merged.active.end(), l);
    out += "  " + quote(l.str()) + (active ? " [style=filled, fillcolor=black, fontcolor=white]" : "") + ";\n";
  }
  for (auto [u, v] : merged.graph.edges())
    out += "  " + quote(Lit::from_code(u).str()) + " -> " + quote(Lit::from_code(v).str()) + ";\n";
  out += "}\n";
  return out;
}

std::string export_dot(const ExpansionTree& tree) {
  std::string out = "digraph expansion {\n";
  std::size_t next = 0;
  auto emit = [&](auto&& self, const ExpansionNode& node) -> std::string {
    const std::string id = quote("n" + std::to_string(next++));
    out += "  " + id + " [shape=ellipse, label=" + quote(node.literal.str()) +
           (node.truncated ? ", style=dashed" : "") + "];\n";
    for (const ExpansionBranch& b : node.subclauses) {
      const std::string sid = quote("n" + std::to_string(next++));
      out += "  " + sid + " [shape=box, label=" + quote("s" + std::to_string(b.id) + " (or)") + "];\n";
      out += "  " + id + " -> " + sid + " [label=\"and\"];\n";
      const std::string left = self(self, b.left);
      const std::string right = self(self, b.right);
      out += "  " + sid + " -> " + left + ";\n";
      out += "  " + sid + " -> " + right + ";\n";
    }
    return id;
  };
  emit(emit, tree.root);
  out += "}\n";
  return out;
}

} // namespace hypersat
