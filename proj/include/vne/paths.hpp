#pragma once

#include <vector>

#include "vne/graph.hpp"

namespace vne {

// All-pairs cheapest paths over edge costs, with deterministic path
// reconstruction: among equal-cost simple paths the one with the
// lexicographically smallest node sequence is returned.
class CheapestPaths {
 public:
  explicit CheapestPaths(const PhysicalNetwork& pn);

  Cost dist(NodeId u, NodeId v) const { return dist_[u][v]; }
  std::vector<NodeId> path(NodeId u, NodeId v) const;
  int node_count() const { return static_cast<int>(dist_.size()); }

 private:
  std::vector<std::vector<std::pair<NodeId, Cost>>> adj_;  // sorted by neighbor
  std::vector<std::vector<Cost>> dist_;
};

}  // namespace vne
