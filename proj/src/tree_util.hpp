#pragma once

#include <vector>

#include "vne/graph.hpp"

namespace vne::detail {

// The unique path between two vertices of a tree, endpoints included.
inline std::vector<NodeId> tree_path(const PhysicalNetwork& pn, NodeId from, NodeId to) {
  const int n = pn.node_count();
  std::vector<NodeId> parent(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<NodeId> queue{from};
  seen[from] = 1;
  for (size_t i = 0; i < queue.size() && !seen[to]; ++i) {
    NodeId u = queue[i];
    for (const auto& [v, idx] : pn.adjacent(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  std::vector<NodeId> path;
  for (NodeId cur = to; cur != -1; cur = parent[cur]) path.push_back(cur);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace vne::detail
