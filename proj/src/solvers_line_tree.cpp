#include <algorithm>
#include <limits>
#include <set>

#include "tree_util.hpp"
#include "vne/solvers.hpp"
#include "vne/topology.hpp"

namespace vne {

namespace {

// Depth-first visit order that walks the spine path once: at each spine
// vertex all off-spine subtrees are explored fully before moving on, so
// spine edges end up traversed once and every other edge twice.
std::vector<NodeId> spine_walk_order(const PhysicalNetwork& pn, const std::vector<NodeId>& spine) {
  std::vector<char> on_spine(pn.node_count(), 0);
  for (NodeId v : spine) on_spine[v] = 1;
  std::vector<NodeId> order;
  auto explore = [&](auto&& self, NodeId u, NodeId parent) -> void {
    order.push_back(u);
    for (const auto& [v, idx] : pn.adjacent(u))
      if (v != parent && !on_spine[v]) self(self, v, u);
  };
  for (size_t i = 0; i < spine.size(); ++i) {
    NodeId prev = i == 0 ? -1 : spine[i - 1];
    explore(explore, spine[i], prev);
  }
  return order;
}

}  // namespace

SolveResult solve_uniform_line_on_tree_wcvne(const Instance& instance) {
  const auto& vn = instance.vn();
  const auto& pn = instance.pn();
  auto vn_order = line_order(vn);
  if (!vn_order) throw std::invalid_argument("virtual network is not a line");
  for (const auto& e : vn.edges())
    if (e.demand != 1) throw std::invalid_argument("virtual line must be uniform");
  if (!pn.is_tree()) throw std::invalid_argument("physical network is not a tree");

  const int n = instance.node_count();
  if (n == 1) {
    Embedding emb;
    emb.node_map = {0};
    return SolveResult::optimal(0, std::move(emb));
  }

  const bool capacitated = instance.capacities_apply();
  Cost total_cost = 0;
  std::vector<std::pair<NodeId, NodeId>> cap_one;
  for (const auto& e : pn.edges()) {
    total_cost += e.cost;
    if (!capacitated) continue;
    // Every tree edge is crossed at least once by any full visit order.
    if (e.capacity == 0) return SolveResult::infeasible();
    if (e.capacity == 1) cap_one.emplace_back(e.u, e.v);
  }

  // Best spine: maximum-cost leaf-to-leaf path covering all capacity-1
  // edges. Restricting endpoints to leaves loses nothing (costs are
  // non-negative) and guarantees the walk ends exactly at the spine tips.
  std::vector<NodeId> leaves;
  for (NodeId v = 0; v < n; ++v)
    if (pn.degree(v) == 1) leaves.push_back(v);

  Cost best_cost = -1;
  std::vector<NodeId> best_spine;
  for (size_t a = 0; a < leaves.size(); ++a) {
    for (size_t b = a + 1; b < leaves.size(); ++b) {
      auto path = detail::tree_path(pn, leaves[a], leaves[b]);
      std::set<std::pair<NodeId, NodeId>> on_path;
      Cost cost = 0;
      for (size_t i = 1; i < path.size(); ++i) {
        auto key = std::minmax(path[i - 1], path[i]);
        on_path.insert(key);
        cost += pn.edges()[pn.edge_index(key.first, key.second)].cost;
      }
      bool covers = std::all_of(cap_one.begin(), cap_one.end(),
                                [&](const auto& e) { return on_path.count(e) > 0; });
      if (covers && cost > best_cost) {
        best_cost = cost;
        best_spine = path;
      }
    }
  }
  if (best_spine.empty()) return SolveResult::infeasible();

  auto order = spine_walk_order(pn, best_spine);
  Embedding emb;
  emb.node_map.assign(n, -1);
  for (int k = 0; k < n; ++k) emb.node_map[(*vn_order)[k]] = order[k];
  for (const auto& e : vn.edges())
    emb.paths[{e.u, e.v}] = detail::tree_path(pn, emb.node_map[e.u], emb.node_map[e.v]);
  return SolveResult::optimal(2 * total_cost - best_cost, std::move(emb));
}

}  // namespace vne
