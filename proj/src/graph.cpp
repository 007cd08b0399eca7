#include "hypersat/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "hypersat/errors.hpp"

namespace hypersat {

Digraph::Digraph(std::size_t nodes, std::span<const Edge> edges) : adj_(nodes) {
  for (auto [u, v] : edges) adj_.at(u).push_back(v);
  for (auto& succ : adj_) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    if (!succ.empty() && succ.back() >= nodes) throw std::out_of_range("edge target outside graph");
  }
}

std::size_t Digraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& succ : adj_) total += succ.size();
  return total;
}

bool Digraph::has_edge(NodeId u, NodeId v) const {
  const auto& succ = adj_.at(u);
  return std::binary_search(succ.begin(), succ.end(), v);
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < adj_.size(); ++u)
    for (NodeId v : adj_[u]) out.emplace_back(u, v);
  return out;
}

Reachability::Reachability(std::size_t nodes)
    : nodes_(nodes), words_((nodes + 63) / 64), bits_(nodes * words_, 0) {}

std::size_t Reachability::pair_count() const {
  std::size_t total = 0;
  for (std::uint64_t word : bits_) total += static_cast<std::size_t>(std::popcount(word));
  return total;
}

SccResult strongly_connected_components(const Digraph& g) {
  constexpr std::uint32_t unvisited = UINT32_MAX;
  const std::size_t n = g.size();
  SccResult result;
  result.component.assign(n, unvisited);
  std::vector<std::uint32_t> index(n, unvisited), low(n, 0);
  std::vector<NodeId> stack;
  std::vector<bool> on_stack(n, false);
  // (node, next successor position)
  std::vector<std::pair<NodeId, std::size_t>> call;
  std::uint32_t counter = 0;

  for (NodeId root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      auto& [u, pos] = call.back();
      auto succ = g.successors(u);
      if (pos < succ.size()) {
        const NodeId v = succ[pos++];
        if (index[v] == unvisited) {
          index[v] = low[v] = counter++;
          stack.push_back(v);
          on_stack[v] = true;
          call.emplace_back(v, 0);
        } else if (on_stack[v]) {
          low[u] = std::min(low[u], index[v]);
        }
        continue;
      }
      const NodeId done = u;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        const auto id = static_cast<std::uint32_t>(result.count++);
        NodeId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          result.component[w] = id;
        } while (w != done);
      }
    }
  }
  result.topological_order.resize(result.count);
  for (std::size_t i = 0; i < result.count; ++i)
    result.topological_order[i] = static_cast<std::uint32_t>(result.count - 1 - i);
  return result;
}

Reachability transitive_closure(const Digraph& g) {
  const std::size_t n = g.size();
  if (n > kClosureMaxNodes)
    throw GuardrailError("transitive closure limited to " + std::to_string(kClosureMaxNodes) + " nodes, got " +
                         std::to_string(n));
  const SccResult scc = strongly_connected_components(g);
  std::vector<std::vector<NodeId>> members(scc.count);
  for (NodeId u = 0; u < n; ++u) members[scc.component[u]].push_back(u);

  // Components complete sinks-first, so a successor component's row is final
  // before any predecessor reads it.
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> rows(scc.count * words, 0);
  for (std::uint32_t c = 0; c < scc.count; ++c) {
    std::uint64_t* row = &rows[c * words];
    for (NodeId u : members[c]) {
      row[u / 64] |= std::uint64_t{1} << (u % 64);
      for (NodeId v : g.successors(u)) {
        const std::uint32_t d = scc.component[v];
        if (d == c) continue;
        for (std::size_t w = 0; w < words; ++w) row[w] |= rows[d * words + w];
      }
    }
  }
  Reachability nodes(n);
  for (NodeId u = 0; u < n; ++u) {
    const std::uint64_t* row = &rows[scc.component[u] * words];
    for (NodeId v = 0; v < n; ++v)
      if ((row[v / 64] >> (v % 64)) & 1u) nodes.set(u, v);
  }
  return nodes;
}

} // namespace hypersat
