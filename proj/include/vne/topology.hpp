#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vne/graph.hpp"

namespace vne {

// Classification is exclusive with precedence
// Line < Star < OversubTwoStar < TwoStar < Tree < Generic;
// a two-node path (and a single node) classifies as Line.
enum class TopologyKind { kLine, kStar, kOversubTwoStar, kTwoStar, kTree, kGeneric };

std::string to_string(TopologyKind k);

struct TopologyClass {
  TopologyKind kind = TopologyKind::kGeneric;
  bool is_uniform = false;  // all edge weights equal 1
  // Filled for kOversubTwoStar only:
  int group_size = 0;       // leaves per group (s)
  int oversubscription = 0; // o, with root-edge weight == s / o
  int group_count = 0;
  NodeId root = -1;         // classifying root (star center / 2-star root)
};

TopologyClass classify_topology(const VirtualNetwork& g);  // weights = demands
TopologyClass classify_topology(const PhysicalNetwork& g); // weights = costs

// Smallest vertex incident to every edge, if one exists. Non-empty exactly
// for stars (plus the degenerate 1- and 2-node graphs).
std::optional<NodeId> star_center(const VirtualNetwork& g);
std::optional<NodeId> star_center(const PhysicalNetwork& g);

// Vertices in path order when the graph is a simple path, starting from the
// smaller-id endpoint. Empty optional otherwise.
std::optional<std::vector<NodeId>> line_order(const VirtualNetwork& g);
std::optional<std::vector<NodeId>> line_order(const PhysicalNetwork& g);

// Concrete shape of an oversubscribed 2-star virtual network.
struct OversubShape {
  NodeId root = -1;
  std::vector<NodeId> group_roots;            // ascending
  std::vector<std::vector<NodeId>> leaves;    // per group, ascending
  int group_size = 0;                         // s
  int oversubscription = 0;                   // o
};

std::optional<OversubShape> oversub_shape(const VirtualNetwork& g);

}  // namespace vne
