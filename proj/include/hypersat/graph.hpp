#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hypersat {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Directed graph over nodes 0..size()-1 with sorted, duplicate-free adjacency.
class Digraph {
public:
  Digraph() = default;
  explicit Digraph(std::size_t nodes) : adj_(nodes) {}
  Digraph(std::size_t nodes, std::span<const Edge> edges);

  std::size_t size() const { return adj_.size(); }
  std::size_t edge_count() const;
  std::span<const NodeId> successors(NodeId u) const { return adj_.at(u); }
  bool has_edge(NodeId u, NodeId v) const;

  /// Sorted edge list.
  std::vector<Edge> edges() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

private:
  std::vector<std::vector<NodeId>> adj_;
};

/// Dense reachability relation. reachable(u, u) holds for every node (the empty
/// path), so the relation is the reflexive-transitive closure.
class Reachability {
public:
  explicit Reachability(std::size_t nodes);

  std::size_t size() const { return nodes_; }
  bool reachable(NodeId u, NodeId v) const { return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u; }
  void set(NodeId u, NodeId v) { bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }
  std::size_t pair_count() const;

private:
  std::size_t nodes_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline constexpr std::size_t kClosureMaxNodes = 2000;

/// Throws GuardrailError above kClosureMaxNodes.
Reachability transitive_closure(const Digraph& g);

struct SccResult {
  /// Component index per node. Components are numbered in the order Tarjan's
  /// algorithm completes them, which is a reverse topological order of the
  /// condensation: every edge u->v has component[u] >= component[v].
  std::vector<std::uint32_t> component;
  std::size_t count = 0;
  /// Component ids, sources first.
  std::vector<std::uint32_t> topological_order;
};

/// Iterative Tarjan; roots are visited in ascending node order.
SccResult strongly_connected_components(const Digraph& g);

} // namespace hypersat
