#include "vne/gen.hpp"

#include <algorithm>
#include <set>

namespace vne::gen {

namespace {

std::int64_t pick(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

VirtualNetwork uniform_line_vn(int n) {
  std::vector<VnEdge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
  return VirtualNetwork(n, std::move(edges));
}

VirtualNetwork star_vn(const std::vector<Demand>& leaf_demands) {
  std::vector<VnEdge> edges;
  for (size_t i = 0; i < leaf_demands.size(); ++i)
    edges.push_back({0, static_cast<int>(i) + 1, leaf_demands[i]});
  return VirtualNetwork(static_cast<int>(leaf_demands.size()) + 1, std::move(edges));
}

VirtualNetwork oversub_vn(int groups, int s, int o) {
  std::vector<VnEdge> edges;
  NodeId next = 1;
  for (int g = 0; g < groups; ++g) {
    NodeId head = next++;
    edges.push_back({0, head, Demand{s / o}});
    for (int l = 0; l < s; ++l) edges.push_back({head, next++, 1});
  }
  return VirtualNetwork(next, std::move(edges));
}

VirtualNetwork random_connected_vn(Rng& rng, int n, Demand max_demand) {
  std::vector<VnEdge> edges;
  std::set<std::pair<int, int>> present;
  for (int v = 1; v < n; ++v) {
    int parent = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
    edges.push_back({parent, v, pick(rng, 0, max_demand)});
    present.insert(std::minmax(parent, v));
  }
  int extras = n >= 3 ? static_cast<int>(rng() % static_cast<std::uint64_t>(n)) : 0;
  for (int k = 0; k < extras; ++k) {
    int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    if (u == v) continue;
    auto key = std::minmax(u, v);
    if (!present.insert(key).second) continue;
    edges.push_back({key.first, key.second, pick(rng, 0, max_demand)});
  }
  return VirtualNetwork(n, std::move(edges));
}

PhysicalNetwork random_connected_pn(Rng& rng, int n, Cost max_cost, Capacity max_cap) {
  auto cap = [&]() { return max_cap == kUnbounded ? kUnbounded : pick(rng, 0, max_cap); };
  std::vector<PnEdge> edges;
  std::set<std::pair<int, int>> present;
  for (int v = 1; v < n; ++v) {
    int parent = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
    edges.push_back({parent, v, pick(rng, 0, max_cost), cap()});
    present.insert(std::minmax(parent, v));
  }
  int extras = n >= 3 ? static_cast<int>(rng() % static_cast<std::uint64_t>(n)) : 0;
  for (int k = 0; k < extras; ++k) {
    int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    if (u == v) continue;
    auto key = std::minmax(u, v);
    if (!present.insert(key).second) continue;
    edges.push_back({key.first, key.second, pick(rng, 0, max_cost), cap()});
  }
  return PhysicalNetwork(n, std::move(edges));
}

PhysicalNetwork random_tree_pn(Rng& rng, int n, Cost max_cost,
                               const std::vector<Capacity>& cap_choices) {
  std::vector<PnEdge> edges;
  for (int v = 1; v < n; ++v) {
    int parent = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
    Capacity cap = cap_choices[rng() % cap_choices.size()];
    edges.push_back({parent, v, pick(rng, 0, max_cost), cap});
  }
  return PhysicalNetwork(n, std::move(edges));
}

PhysicalNetwork random_star_pn(Rng& rng, int n, Cost max_cost, Capacity max_cap) {
  std::vector<PnEdge> edges;
  for (int v = 1; v < n; ++v) {
    Capacity cap = max_cap == kUnbounded ? kUnbounded : pick(rng, 0, max_cap);
    edges.push_back({0, v, pick(rng, 0, max_cost), cap});
  }
  return PhysicalNetwork(n, std::move(edges));
}

}  // namespace vne::gen
