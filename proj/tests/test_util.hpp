#pragma once

#include <algorithm>
#include <vector>

#include "vne/embedding.hpp"
#include "vne/gen.hpp"
#include "vne/instance.hpp"

namespace vnetest {

using namespace vne;

inline PhysicalNetwork pn_of(int n, std::vector<PnEdge> edges) {
  return PhysicalNetwork(n, std::move(edges));
}

inline PhysicalNetwork uniform_line_pn(int n, Capacity cap = kUnbounded) {
  std::vector<PnEdge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1, cap});
  return PhysicalNetwork(n, std::move(edges));
}

inline PhysicalNetwork uniform_star_pn(int n, Capacity cap = kUnbounded) {
  std::vector<PnEdge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({0, v, 1, cap});
  return PhysicalNetwork(n, std::move(edges));
}

// Identity embedding for matching topologies: node i onto node i, each
// virtual edge onto the physical edge with the same endpoints.
inline Embedding identity_embedding(const VirtualNetwork& vn) {
  Embedding emb;
  emb.node_map.resize(vn.node_count());
  for (int i = 0; i < vn.node_count(); ++i) emb.node_map[i] = i;
  for (const auto& e : vn.edges()) emb.paths[{e.u, e.v}] = {e.u, e.v};
  return emb;
}

// Test-side exhaustive enumeration of simple paths, independent of the
// library's reconstruction.
inline void enumerate_simple_paths(const PhysicalNetwork& pn, NodeId from, NodeId to,
                                   std::vector<NodeId>& path, std::vector<char>& visited,
                                   std::vector<std::vector<NodeId>>& out) {
  if (path.back() == to) {
    out.push_back(path);
    return;
  }
  for (const auto& [next, idx] : pn.adjacent(path.back())) {
    if (visited[next]) continue;
    visited[next] = 1;
    path.push_back(next);
    enumerate_simple_paths(pn, from, to, path, visited, out);
    path.pop_back();
    visited[next] = 0;
  }
}

inline std::vector<std::vector<NodeId>> all_simple_paths(const PhysicalNetwork& pn, NodeId from,
                                                         NodeId to) {
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> path{from};
  std::vector<char> visited(pn.node_count(), 0);
  visited[from] = 1;
  enumerate_simple_paths(pn, from, to, path, visited, out);
  return out;
}

inline Cost path_cost(const PhysicalNetwork& pn, const std::vector<NodeId>& path) {
  Cost c = 0;
  for (size_t i = 1; i < path.size(); ++i)
    c += pn.edges()[pn.edge_index(path[i - 1], path[i])].cost;
  return c;
}

}  // namespace vnetest
