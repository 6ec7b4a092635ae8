#include "vne/topology.hpp"

#include <algorithm>
#include <numeric>

namespace vne {

namespace {

// Neutral view shared by both network types.
struct View {
  int n = 0;
  std::vector<std::vector<std::pair<NodeId, std::int64_t>>> adj;  // (neighbor, weight)
  int edge_count = 0;
  bool uniform = true;
};

View make_view(const VirtualNetwork& g) {
  View v;
  v.n = g.node_count();
  v.adj.assign(v.n, {});
  v.edge_count = static_cast<int>(g.edges().size());
  for (const auto& e : g.edges()) {
    v.adj[e.u].emplace_back(e.v, e.demand);
    v.adj[e.v].emplace_back(e.u, e.demand);
    v.uniform &= e.demand == 1;
  }
  for (auto& a : v.adj) std::sort(a.begin(), a.end());
  return v;
}

View make_view(const PhysicalNetwork& g) {
  View v;
  v.n = g.node_count();
  v.adj.assign(v.n, {});
  v.edge_count = static_cast<int>(g.edges().size());
  for (const auto& e : g.edges()) {
    v.adj[e.u].emplace_back(e.v, e.cost);
    v.adj[e.v].emplace_back(e.u, e.cost);
    v.uniform &= e.cost == 1;
  }
  for (auto& a : v.adj) std::sort(a.begin(), a.end());
  return v;
}

bool is_tree(const View& v) { return v.edge_count == v.n - 1; }

bool is_line(const View& v) {
  if (!is_tree(v)) return false;
  for (int u = 0; u < v.n; ++u)
    if (v.adj[u].size() > 2) return false;
  return true;
}

std::optional<NodeId> find_star_center(const View& v) {
  if (!is_tree(v)) return std::nullopt;
  for (int u = 0; u < v.n; ++u)
    if (static_cast<int>(v.adj[u].size()) == v.edge_count) return u;
  return std::nullopt;
}

// Maximum hop distance from r, by BFS.
int height_from(const View& v, NodeId r) {
  std::vector<int> depth(v.n, -1);
  depth[r] = 0;
  std::vector<NodeId> queue{r};
  int best = 0;
  for (size_t i = 0; i < queue.size(); ++i) {
    NodeId u = queue[i];
    for (const auto& [w, wt] : v.adj[u]) {
      if (depth[w] < 0) {
        depth[w] = depth[u] + 1;
        best = std::max(best, depth[w]);
        queue.push_back(w);
      }
    }
  }
  return best;
}

// Oversubscribed test with r as root. Requires: every root child has the
// same positive number of leaf children, all leaf edges weigh 1, and the
// common root-edge weight divides the group size.
struct OversubParams {
  int s = 0, o = 0, groups = 0;
};

std::optional<OversubParams> oversub_at_root(const View& v, NodeId r) {
  OversubParams params;
  params.groups = static_cast<int>(v.adj[r].size());
  if (params.groups == 0) return std::nullopt;
  std::int64_t root_weight = -1;
  int s = -1;
  for (const auto& [child, wt] : v.adj[r]) {
    if (root_weight < 0) root_weight = wt;
    if (wt != root_weight) return std::nullopt;
    int leaf_count = 0;
    for (const auto& [grand, gwt] : v.adj[child]) {
      if (grand == r) continue;
      if (v.adj[grand].size() != 1) return std::nullopt;  // deeper than 2
      if (gwt != 1) return std::nullopt;                  // leaf edges carry demand 1
      ++leaf_count;
    }
    if (leaf_count == 0) return std::nullopt;
    if (s < 0) s = leaf_count;
    if (leaf_count != s) return std::nullopt;
  }
  if (root_weight < 1) return std::nullopt;
  if (s % root_weight != 0) return std::nullopt;  // demand must be s/o for integer o
  params.s = s;
  params.o = static_cast<int>(s / root_weight);
  return params;
}

TopologyClass classify(const View& v) {
  TopologyClass out;
  out.is_uniform = v.uniform;
  if (is_line(v)) {
    out.kind = TopologyKind::kLine;
    return out;
  }
  if (auto center = find_star_center(v)) {
    out.kind = TopologyKind::kStar;
    out.root = *center;
    return out;
  }
  if (is_tree(v)) {
    for (NodeId r = 0; r < v.n; ++r) {
      if (height_from(v, r) != 2) continue;
      if (auto params = oversub_at_root(v, r)) {
        out.kind = TopologyKind::kOversubTwoStar;
        out.root = r;
        out.group_size = params->s;
        out.oversubscription = params->o;
        out.group_count = params->groups;
        return out;
      }
    }
    for (NodeId r = 0; r < v.n; ++r) {
      if (height_from(v, r) == 2) {
        out.kind = TopologyKind::kTwoStar;
        out.root = r;
        return out;
      }
    }
    out.kind = TopologyKind::kTree;
    return out;
  }
  out.kind = TopologyKind::kGeneric;
  return out;
}

std::optional<std::vector<NodeId>> path_order(const View& v) {
  if (v.n == 1) return std::vector<NodeId>{0};
  if (!is_line(v)) return std::nullopt;
  NodeId start = -1;
  for (int u = 0; u < v.n; ++u) {
    if (v.adj[u].size() == 1) {
      start = u;
      break;
    }
  }
  std::vector<NodeId> order{start};
  NodeId prev = -1, cur = start;
  while (static_cast<int>(order.size()) < v.n) {
    NodeId next = -1;
    for (const auto& [w, wt] : v.adj[cur]) {
      if (w != prev) {
        next = w;
        break;
      }
    }
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace

std::string to_string(TopologyKind k) {
  switch (k) {
    case TopologyKind::kLine: return "line";
    case TopologyKind::kStar: return "star";
    case TopologyKind::kOversubTwoStar: return "oversub-2-star";
    case TopologyKind::kTwoStar: return "2-star";
    case TopologyKind::kTree: return "tree";
    case TopologyKind::kGeneric: return "generic";
  }
  return "?";
}

TopologyClass classify_topology(const VirtualNetwork& g) { return classify(make_view(g)); }
TopologyClass classify_topology(const PhysicalNetwork& g) { return classify(make_view(g)); }

std::optional<NodeId> star_center(const VirtualNetwork& g) {
  return find_star_center(make_view(g));
}
std::optional<NodeId> star_center(const PhysicalNetwork& g) {
  return find_star_center(make_view(g));
}

std::optional<std::vector<NodeId>> line_order(const VirtualNetwork& g) {
  return path_order(make_view(g));
}
std::optional<std::vector<NodeId>> line_order(const PhysicalNetwork& g) {
  return path_order(make_view(g));
}

// Structural probe, deliberately ignoring classification precedence: a
// one-group instance classifies as a star yet still has the rooted shape
// the subtree solver needs.
std::optional<OversubShape> oversub_shape(const VirtualNetwork& g) {
  auto view = make_view(g);
  if (!is_tree(view)) return std::nullopt;
  for (NodeId r = 0; r < view.n; ++r) {
    if (height_from(view, r) != 2) continue;
    auto params = oversub_at_root(view, r);
    if (!params) continue;
    OversubShape shape;
    shape.root = r;
    shape.group_size = params->s;
    shape.oversubscription = params->o;
    for (const auto& [child, wt] : view.adj[r]) {
      shape.group_roots.push_back(child);
      std::vector<NodeId> leaves;
      for (const auto& [grand, gwt] : view.adj[child])
        if (grand != r) leaves.push_back(grand);
      shape.leaves.push_back(std::move(leaves));
    }
    return shape;
  }
  return std::nullopt;
}

}  // namespace vne
