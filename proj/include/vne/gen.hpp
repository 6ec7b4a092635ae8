#pragma once

#include <random>
#include <vector>

#include "vne/instance.hpp"

namespace vne::gen {

using Rng = std::mt19937_64;

// Uniform line with unit demands.
VirtualNetwork uniform_line_vn(int n);

// Star with center 0 and the given leaf-edge demands.
VirtualNetwork star_vn(const std::vector<Demand>& leaf_demands);

// Oversubscribed 2-star: root 0, `groups` groups of `s` leaves, unit leaf
// demands, root edges s / o.
VirtualNetwork oversub_vn(int groups, int s, int o);

// Random spanning tree plus a few extra edges; demands in [0, max_demand].
VirtualNetwork random_connected_vn(Rng& rng, int n, Demand max_demand);

// Random connected graph; costs in [0, max_cost]. Capacities in
// [0, max_cap], or all unbounded when max_cap == kUnbounded.
PhysicalNetwork random_connected_pn(Rng& rng, int n, Cost max_cost, Capacity max_cap);

// Random tree; capacities drawn from cap_choices.
PhysicalNetwork random_tree_pn(Rng& rng, int n, Cost max_cost,
                               const std::vector<Capacity>& cap_choices);

// Star physical network with hub 0; leaf costs in [0, max_cost],
// capacities in [0, max_cap] (or unbounded).
PhysicalNetwork random_star_pn(Rng& rng, int n, Cost max_cost, Capacity max_cap);

}  // namespace vne::gen
