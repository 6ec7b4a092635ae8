#include <algorithm>
#include <limits>

#include "vne/hungarian.hpp"
#include "vne/paths.hpp"
#include "vne/solvers.hpp"
#include "vne/topology.hpp"

namespace vne {

SolveResult solve_star_vn_wvne(const Instance& instance) {
  if (instance.variant() != Variant::kWvne)
    throw std::invalid_argument("star-vn solver handles the cost-only variant");
  const auto& vn = instance.vn();
  auto center = star_center(vn);
  if (!center) throw std::invalid_argument("virtual network is not a star");

  const int n = instance.node_count();
  if (n == 1) {
    Embedding emb;
    emb.node_map = {0};
    return SolveResult::optimal(0, std::move(emb));
  }

  // Leaves ordered heavy first; equal demands by ascending id.
  std::vector<std::pair<Demand, NodeId>> leaves;
  for (NodeId x = 0; x < n; ++x) {
    if (x == *center) continue;
    leaves.emplace_back(vn.edges()[vn.edge_index(*center, x)].demand, x);
  }
  std::sort(leaves.begin(), leaves.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });

  CheapestPaths cp(instance.pn());
  Cost best = std::numeric_limits<Cost>::max();
  NodeId best_center = -1;
  std::vector<std::pair<Cost, NodeId>> best_dists;
  for (NodeId j = 0; j < n; ++j) {
    std::vector<std::pair<Cost, NodeId>> dists;
    for (NodeId x = 0; x < n; ++x)
      if (x != j) dists.emplace_back(cp.dist(j, x), x);
    std::sort(dists.begin(), dists.end());
    Cost total = 0;
    for (size_t k = 0; k < leaves.size(); ++k) total += leaves[k].first * dists[k].first;
    if (total < best) {
      best = total;
      best_center = j;
      best_dists = dists;
    }
  }

  Embedding emb;
  emb.node_map.assign(n, -1);
  emb.node_map[*center] = best_center;
  for (size_t k = 0; k < leaves.size(); ++k) emb.node_map[leaves[k].second] = best_dists[k].second;
  for (const auto& e : vn.edges()) {
    emb.paths[{e.u, e.v}] = cp.path(emb.node_map[e.u], emb.node_map[e.v]);
  }
  return SolveResult::optimal(best, std::move(emb));
}

SolveResult solve_on_star_pn_wcvne(const Instance& instance) {
  const auto& pn = instance.pn();
  auto hub_opt = star_center(pn);
  if (!hub_opt) throw std::invalid_argument("physical network is not a star");
  const NodeId hub = *hub_opt;
  const int n = instance.node_count();
  const auto& vn = instance.vn();
  const bool capacitated = instance.capacities_apply();

  if (n == 1) {
    Embedding emb;
    emb.node_map = {0};
    return SolveResult::optimal(0, std::move(emb));
  }

  // Hub behaves like a leaf with zero cost and unlimited capacity.
  std::vector<Cost> leaf_cost(n, 0);
  std::vector<Capacity> leaf_cap(n, kUnbounded);
  for (const auto& e : pn.edges()) {
    NodeId leaf = e.u == hub ? e.v : e.u;
    leaf_cost[leaf] = e.cost;
    leaf_cap[leaf] = e.capacity;
  }
  std::vector<Demand> vertex_demand(n, 0);
  Demand max_demand = 0;
  Cost max_cost = 0;
  for (NodeId u = 0; u < n; ++u) {
    vertex_demand[u] = vn.incident_demand(u);
    max_demand = std::max(max_demand, vertex_demand[u]);
  }
  for (NodeId x = 0; x < n; ++x) max_cost = std::max(max_cost, leaf_cost[x]);

  // Barred placements get a cost no feasible assignment can reach, then a
  // post-check rejects any optimum that still uses one.
  const std::int64_t forbidden = static_cast<std::int64_t>(n) * max_cost * max_demand + 1;
  std::vector<std::vector<std::int64_t>> cost(n, std::vector<std::int64_t>(n, 0));
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId x = 0; x < n; ++x) {
      if (capacitated && !capacity_allows(leaf_cap[x], vertex_demand[u]))
        cost[u][x] = forbidden;
      else
        cost[u][x] = leaf_cost[x] * vertex_demand[u];
    }
  }

  auto assignment = solve_assignment(cost);
  for (NodeId u = 0; u < n; ++u)
    if (cost[u][assignment.row_to_col[u]] >= forbidden) return SolveResult::infeasible();

  Embedding emb;
  emb.node_map = assignment.row_to_col;
  for (const auto& e : vn.edges()) {
    NodeId a = emb.node_map[e.u], b = emb.node_map[e.v];
    std::vector<NodeId> path;
    if (a == hub || b == hub)
      path = {a, b};
    else
      path = {a, hub, b};
    emb.paths[{e.u, e.v}] = std::move(path);
  }
  return SolveResult::optimal(assignment.total, std::move(emb));
}

SolveResult solve_line_on_uniform_line_wvne(const Instance& instance) {
  if (instance.variant() != Variant::kWvne)
    throw std::invalid_argument("line-identity solver handles the cost-only variant");
  auto vn_order = line_order(instance.vn());
  auto pn_order = line_order(instance.pn());
  if (!vn_order) throw std::invalid_argument("virtual network is not a line");
  if (!pn_order || !classify_topology(instance.pn()).is_uniform)
    throw std::invalid_argument("physical network is not a uniform line");

  const int n = instance.node_count();
  Embedding emb;
  emb.node_map.assign(n, -1);
  for (int k = 0; k < n; ++k) emb.node_map[(*vn_order)[k]] = (*pn_order)[k];
  Cost total = 0;
  for (const auto& e : instance.vn().edges()) {
    emb.paths[{e.u, e.v}] = {emb.node_map[e.u], emb.node_map[e.v]};
    total += e.demand;
  }
  return SolveResult::optimal(total, std::move(emb));
}

}  // namespace vne
