#pragma once

#include <utility>
#include <vector>

#include "vne/types.hpp"

namespace vne {

struct VnEdge {
  NodeId u = 0;
  NodeId v = 0;  // u < v after normalization
  Demand demand = 0;
};

struct PnEdge {
  NodeId u = 0;
  NodeId v = 0;  // u < v after normalization
  Cost cost = 0;
  Capacity capacity = kUnbounded;
};

namespace detail {
// Shared construction checks for both network types: simple undirected
// connected graph, ids in [0, n). Throws std::invalid_argument.
void check_simple_connected(int n, const std::vector<std::pair<NodeId, NodeId>>& edges,
                            const char* what);
}  // namespace detail

// Undirected connected graph with a per-edge demand. Immutable after
// construction; safe to share across threads.
class VirtualNetwork {
 public:
  VirtualNetwork(int node_count, std::vector<VnEdge> edges);

  int node_count() const { return n_; }
  const std::vector<VnEdge>& edges() const { return edges_; }
  // Neighbors of u as (neighbor, index into edges()), sorted by neighbor id.
  const std::vector<std::pair<NodeId, int>>& adjacent(NodeId u) const { return adj_[u]; }
  int degree(NodeId u) const { return static_cast<int>(adj_[u].size()); }
  // Index into edges() for (u, v), or -1 when absent.
  int edge_index(NodeId u, NodeId v) const;
  // Sum of demands over edges incident to u.
  Demand incident_demand(NodeId u) const;

 private:
  int n_;
  std::vector<VnEdge> edges_;                       // sorted by (u, v)
  std::vector<std::vector<std::pair<NodeId, int>>> adj_;
};

// Undirected connected graph with per-edge cost and capacity. Immutable.
class PhysicalNetwork {
 public:
  PhysicalNetwork(int node_count, std::vector<PnEdge> edges);

  int node_count() const { return n_; }
  const std::vector<PnEdge>& edges() const { return edges_; }
  const std::vector<std::pair<NodeId, int>>& adjacent(NodeId u) const { return adj_[u]; }
  int degree(NodeId u) const { return static_cast<int>(adj_[u].size()); }
  int edge_index(NodeId u, NodeId v) const;
  bool is_tree() const { return static_cast<int>(edges_.size()) == n_ - 1; }

 private:
  int n_;
  std::vector<PnEdge> edges_;                       // sorted by (u, v)
  std::vector<std::vector<std::pair<NodeId, int>>> adj_;
};

}  // namespace vne
