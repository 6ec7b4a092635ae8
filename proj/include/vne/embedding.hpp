#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vne/instance.hpp"

namespace vne {

// Node bijection plus one simple physical path for every virtual edge.
// Path keys are normalized to (u, v) with u < v; the stored node list
// still runs from node_map[u] to node_map[v].
struct Embedding {
  std::vector<NodeId> node_map;
  std::map<std::pair<NodeId, NodeId>, std::vector<NodeId>> paths;

  const std::vector<NodeId>& path(NodeId u, NodeId v) const {
    return paths.at(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
  }
};

struct Violation {
  std::string code;    // e.g. "not-a-bijection", "path-not-simple"
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

// Checks every embedding invariant and reports all violations; never throws.
ValidationReport validate_embedding(const Instance& instance, const Embedding& emb);

// Sum over virtual edges of demand times routed path cost.
// Throws std::invalid_argument when the embedding does not validate.
Cost embedding_cost(const Instance& instance, const Embedding& emb);

// Load per physical edge, keyed by (u, v) with u < v. Every physical edge
// appears in the map (zero-load edges included).
std::map<std::pair<NodeId, NodeId>, std::int64_t> edge_loads(const Instance& instance,
                                                             const Embedding& emb);

// True iff every physical edge load fits its capacity.
bool check_capacities(const Instance& instance, const Embedding& emb);

}  // namespace vne
