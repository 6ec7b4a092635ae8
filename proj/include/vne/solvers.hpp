#pragma once

#include <map>

#include "vne/instance.hpp"
#include "vne/solve.hpp"

namespace vne {

// Star virtual network, cost-only variant, any physical network.
// Pairs heavy leaves with near vertices around every candidate center image
// and keeps the cheapest. Throws std::invalid_argument when the virtual
// network is not a star or the variant is capacitated.
SolveResult solve_star_vn_wvne(const Instance& instance);

// Any virtual network on a star physical network, all three variants.
// Reduces to a minimum-cost assignment of virtual vertices to physical
// vertices; a vertex whose incident demand exceeds a leaf capacity is
// barred from that leaf. Throws when the physical network is not a star.
SolveResult solve_on_star_pn_wcvne(const Instance& instance);

// Uniform line virtual network on a tree physical network, with capacities.
// The optimum walks the tree once along a maximum-cost path that carries
// every capacity-1 edge and twice everywhere else.
SolveResult solve_uniform_line_on_tree_wcvne(const Instance& instance);

// Oversubscribed 2-star virtual network on a tree physical network, with
// capacities. Bottom-up table over (groups consumed, leaves crossing out,
// leaves crossing in) per subtree, merged child by child; tried from every
// root placement. When edge_bandwidth is non-null it receives, per tree
// edge, the crossing bandwidth recorded for the winning table entry.
SolveResult solve_oversub_2star_on_tree_wcvne(
    const Instance& instance,
    std::map<std::pair<NodeId, NodeId>, std::int64_t>* edge_bandwidth = nullptr);

// Line virtual network on a uniform line physical network, cost-only:
// mapping the lines onto each other in order is optimal.
SolveResult solve_line_on_uniform_line_wvne(const Instance& instance);

}  // namespace vne
