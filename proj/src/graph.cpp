#include "vne/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace vne {

namespace detail {

void check_simple_connected(int n, const std::vector<std::pair<NodeId, NodeId>>& edges,
                            const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": node count must be positive");
  std::set<std::pair<NodeId, NodeId>> seen;
  std::vector<std::vector<NodeId>> adj(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument(std::string(what) + ": node id out of range");
    if (u == v) throw std::invalid_argument(std::string(what) + ": self-loop");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw std::invalid_argument(std::string(what) + ": parallel edge");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  // DFS connectivity from node 0.
  std::vector<char> visited(n, 0);
  std::vector<NodeId> stack{0};
  visited[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (NodeId v : adj[u]) {
      if (!visited[v]) {
        visited[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  if (count != n) throw std::invalid_argument(std::string(what) + ": graph not connected");
}

}  // namespace detail

VirtualNetwork::VirtualNetwork(int node_count, std::vector<VnEdge> edges)
    : n_(node_count), edges_(std::move(edges)) {
  std::vector<std::pair<NodeId, NodeId>> plain;
  plain.reserve(edges_.size());
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.demand < 0) throw std::invalid_argument("virtual network: negative demand");
    plain.emplace_back(e.u, e.v);
  }
  detail::check_simple_connected(n_, plain, "virtual network");
  std::sort(edges_.begin(), edges_.end(),
            [](const VnEdge& a, const VnEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  adj_.assign(n_, {});
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    adj_[edges_[i].u].emplace_back(edges_[i].v, i);
    adj_[edges_[i].v].emplace_back(edges_[i].u, i);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int VirtualNetwork::edge_index(NodeId u, NodeId v) const {
  if (u > v) std::swap(u, v);
  for (const auto& [nbr, idx] : adj_[u])
    if (nbr == v) return idx;
  return -1;
}

Demand VirtualNetwork::incident_demand(NodeId u) const {
  Demand total = 0;
  for (const auto& [nbr, idx] : adj_[u]) total += edges_[idx].demand;
  return total;
}

PhysicalNetwork::PhysicalNetwork(int node_count, std::vector<PnEdge> edges)
    : n_(node_count), edges_(std::move(edges)) {
  std::vector<std::pair<NodeId, NodeId>> plain;
  plain.reserve(edges_.size());
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.cost < 0) throw std::invalid_argument("physical network: negative cost");
    if (e.capacity < 0 && e.capacity != kUnbounded)
      throw std::invalid_argument("physical network: negative capacity");
    plain.emplace_back(e.u, e.v);
  }
  detail::check_simple_connected(n_, plain, "physical network");
  std::sort(edges_.begin(), edges_.end(),
            [](const PnEdge& a, const PnEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  adj_.assign(n_, {});
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    adj_[edges_[i].u].emplace_back(edges_[i].v, i);
    adj_[edges_[i].v].emplace_back(edges_[i].u, i);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int PhysicalNetwork::edge_index(NodeId u, NodeId v) const {
  if (u > v) std::swap(u, v);
  for (const auto& [nbr, idx] : adj_[u])
    if (nbr == v) return idx;
  return -1;
}

}  // namespace vne
