#include "vne/paths.hpp"

#include <algorithm>
#include <limits>

namespace vne {

namespace {
constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;
}

CheapestPaths::CheapestPaths(const PhysicalNetwork& pn) {
  const int n = pn.node_count();
  adj_.assign(n, {});
  for (const auto& e : pn.edges()) {
    adj_[e.u].emplace_back(e.v, e.cost);
    adj_[e.v].emplace_back(e.u, e.cost);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());

  dist_.assign(n, std::vector<Cost>(n, kInf));
  for (int i = 0; i < n; ++i) dist_[i][i] = 0;
  for (const auto& e : pn.edges()) {
    dist_[e.u][e.v] = std::min(dist_[e.u][e.v], e.cost);
    dist_[e.v][e.u] = dist_[e.u][e.v];
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (dist_[i][k] + dist_[k][j] < dist_[i][j]) dist_[i][j] = dist_[i][k] + dist_[k][j];
}

namespace {

// Depth-first search over cost-consistent next hops in ascending node order.
// The first complete simple path found is the lexicographically smallest
// cheapest one. Backtracking is needed because with zero-cost edges a
// consistent hop can lead into a dead end of already-visited nodes.
bool extend_path(const std::vector<std::vector<std::pair<NodeId, Cost>>>& adj,
                 const std::vector<std::vector<Cost>>& dist, NodeId target,
                 std::vector<NodeId>& path, std::vector<char>& visited) {
  NodeId cur = path.back();
  if (cur == target) return true;
  for (const auto& [next, w] : adj[cur]) {
    if (visited[next]) continue;
    if (w + dist[next][target] != dist[cur][target]) continue;
    visited[next] = 1;
    path.push_back(next);
    if (extend_path(adj, dist, target, path, visited)) return true;
    path.pop_back();
    visited[next] = 0;
  }
  return false;
}

}  // namespace

std::vector<NodeId> CheapestPaths::path(NodeId u, NodeId v) const {
  std::vector<NodeId> out{u};
  if (u == v) return out;
  std::vector<char> visited(dist_.size(), 0);
  visited[u] = 1;
  bool found = extend_path(adj_, dist_, v, out, visited);
  if (!found) throw std::logic_error("cheapest path reconstruction failed");
  return out;
}

}  // namespace vne
