#include <algorithm>
#include <cassert>
#include <limits>

#include "tree_util.hpp"
#include "vne/solvers.hpp"
#include "vne/topology.hpp"

namespace vne {

namespace {

constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;

// Table entry provenance, enough to rebuild the embedding.
struct Back {
  enum class Kind { kNone, kHoldsLeaf, kHoldsGroupRoot, kHoldsVnRoot, kMerge };
  Kind kind = Kind::kNone;
  int child = -1;       // merged child (PN vertex), kMerge only
  int left_state = -1;  // state in the previous level
  int right_state = -1; // state in the child's final table
  int m1 = 0, m2 = 0;   // leaves matched across the merge, each direction
};

struct Table {
  std::vector<Cost> val;
  std::vector<Back> back;
  explicit Table(int states) : val(states, kInf), back(states) {}
};

struct NodeDp {
  std::vector<NodeId> children;   // ascending
  std::vector<Table> levels;      // levels[i] = children[0..i) merged
  Table final_table{0};           // after charging the parent edge
  NodeId parent = -1;
  Cost parent_cost = 0;
  Capacity parent_cap = kUnbounded;
};

struct DpContext {
  int groups = 0;
  int max_leaves = 0;   // groups * group_size
  Demand root_edge_demand = 0;
  int states = 0;

  int index(int x, int out, int in) const {
    return (x * (max_leaves + 1) + out) * (max_leaves + 1) + in;
  }
  void decode(int state, int& x, int& out, int& in) const {
    in = state % (max_leaves + 1);
    out = (state / (max_leaves + 1)) % (max_leaves + 1);
    x = state / ((max_leaves + 1) * (max_leaves + 1));
  }
};

// One merged region of the tree during reconstruction.
struct Region {
  enum class Role { kVnRoot, kGroupRoot, kLeaf };
  std::vector<std::pair<NodeId, Role>> holders;
  std::vector<NodeId> out_stubs;  // group-root vertex per leaf still to place
  std::vector<NodeId> in_slots;   // vertices holding leaves of outside groups
};

class OversubDp {
 public:
  OversubDp(const Instance& instance, const OversubShape& shape)
      : instance_(instance), pn_(instance.pn()), shape_(shape) {
    ctx_.groups = static_cast<int>(shape.group_roots.size());
    ctx_.max_leaves = ctx_.groups * shape.group_size;
    ctx_.root_edge_demand =
        instance.vn().edges()[instance.vn().edge_index(shape.root, shape.group_roots[0])].demand;
    ctx_.states = (ctx_.groups + 1) * (ctx_.max_leaves + 1) * (ctx_.max_leaves + 1);
    capacitated_ = instance.capacities_apply();
  }

  // Cost of the best embedding rooted at R, or kInf.
  Cost run(NodeId root) {
    root_ = root;
    build_rooted_tree();
    for (NodeId r : postorder_) compute_node(r);
    const int goal = ctx_.index(ctx_.groups, 0, 0);
    return nodes_[root].final_table.val[goal];
  }

  Embedding reconstruct() {
    resolved_.clear();
    Region top = build_region(root_, ctx_.index(ctx_.groups, 0, 0));
    assert(top.out_stubs.empty() && top.in_slots.empty());

    Embedding emb;
    emb.node_map.assign(instance_.node_count(), -1);
    // Group roots in ascending physical id pair with ascending virtual ids;
    // groups are interchangeable (equal size, equal demands).
    std::vector<NodeId> group_holder;
    for (const auto& [v, role] : top.holders)
      if (role == Region::Role::kGroupRoot) group_holder.push_back(v);
    std::sort(group_holder.begin(), group_holder.end());
    std::vector<int> group_at(pn_.node_count(), -1);
    for (size_t g = 0; g < group_holder.size(); ++g) {
      emb.node_map[shape_.group_roots[g]] = group_holder[g];
      group_at[group_holder[g]] = static_cast<int>(g);
    }
    emb.node_map[shape_.root] = root_;
    std::vector<size_t> next_leaf(group_holder.size(), 0);
    for (const auto& [group_vertex, leaf_vertex] : resolved_) {
      int g = group_at[group_vertex];
      NodeId vn_leaf = shape_.leaves[g][next_leaf[g]++];
      emb.node_map[vn_leaf] = leaf_vertex;
    }
    for (const auto& e : instance_.vn().edges())
      emb.paths[{e.u, e.v}] = detail::tree_path(pn_, emb.node_map[e.u], emb.node_map[e.v]);
    return emb;
  }

  // Crossing bandwidth per tree edge for the winning configuration.
  std::map<std::pair<NodeId, NodeId>, std::int64_t> edge_bandwidth() {
    std::map<std::pair<NodeId, NodeId>, std::int64_t> out;
    collect_bandwidth(root_, ctx_.index(ctx_.groups, 0, 0), out);
    return out;
  }

 private:
  void build_rooted_tree() {
    const int n = pn_.node_count();
    nodes_.assign(n, {});
    postorder_.clear();
    std::vector<char> seen(n, 0);
    // Iterative DFS producing children lists and a postorder.
    std::vector<std::pair<NodeId, size_t>> stack{{root_, 0}};
    seen[root_] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next == 0) {
        for (const auto& [v, idx] : pn_.adjacent(u)) {
          if (!seen[v]) nodes_[u].children.push_back(v);
        }
      }
      if (next < nodes_[u].children.size()) {
        NodeId c = nodes_[u].children[next++];
        seen[c] = 1;
        nodes_[c].parent = u;
        const auto& e = pn_.edges()[pn_.edge_index(u, c)];
        nodes_[c].parent_cost = e.cost;
        nodes_[c].parent_cap = e.capacity;
        stack.emplace_back(c, 0);
      } else {
        postorder_.push_back(u);
        stack.pop_back();
      }
    }
  }

  void compute_node(NodeId r) {
    NodeDp& node = nodes_[r];
    node.levels.clear();
    node.levels.emplace_back(ctx_.states);
    Table& base = node.levels.back();
    if (r == root_) {
      base.val[ctx_.index(0, 0, 0)] = 0;
      base.back[ctx_.index(0, 0, 0)].kind = Back::Kind::kHoldsVnRoot;
    } else {
      base.val[ctx_.index(0, 0, 1)] = 0;
      base.back[ctx_.index(0, 0, 1)].kind = Back::Kind::kHoldsLeaf;
      if (shape_.group_size <= ctx_.max_leaves) {
        base.val[ctx_.index(1, shape_.group_size, 0)] = 0;
        base.back[ctx_.index(1, shape_.group_size, 0)].kind = Back::Kind::kHoldsGroupRoot;
      }
    }
    for (NodeId c : node.children) {
      const Table& left = node.levels.back();
      const Table& right = nodes_[c].final_table;
      Table merged(ctx_.states);
      for (int ls = 0; ls < ctx_.states; ++ls) {
        if (left.val[ls] >= kInf) continue;
        int x1, o1, i1;
        ctx_.decode(ls, x1, o1, i1);
        for (int rs = 0; rs < ctx_.states; ++rs) {
          if (right.val[rs] >= kInf) continue;
          int x2, o2, i2;
          ctx_.decode(rs, x2, o2, i2);
          int x = x1 + x2;
          if (x > ctx_.groups) continue;
          // M leaves settle across the merge: pending out-leaves of one
          // side into pending in-slots of the other.
          const int max_m = std::min(o1, i2) + std::min(o2, i1);
          Cost val = left.val[ls] + right.val[rs];
          for (int m = 0; m <= max_m; ++m) {
            int out = o1 + o2 - m;
            int in = i1 + i2 - m;
            if (out > ctx_.max_leaves || in > ctx_.max_leaves) continue;
            int idx = ctx_.index(x, out, in);
            if (val < merged.val[idx]) {
              merged.val[idx] = val;
              Back& b = merged.back[idx];
              b.kind = Back::Kind::kMerge;
              b.child = c;
              b.left_state = ls;
              b.right_state = rs;
              b.m1 = std::min(m, std::min(o1, i2));
              b.m2 = m - b.m1;
            }
          }
        }
      }
      node.levels.push_back(std::move(merged));
    }
    // Charge the edge to the parent; drop states that overflow its capacity.
    node.final_table = Table(ctx_.states);
    const Table& merged = node.levels.back();
    for (int s = 0; s < ctx_.states; ++s) {
      if (merged.val[s] >= kInf) continue;
      if (r == root_) {
        node.final_table.val[s] = merged.val[s];
        continue;
      }
      int x, out, in;
      ctx_.decode(s, x, out, in);
      std::int64_t bandwidth = static_cast<std::int64_t>(x) * ctx_.root_edge_demand + out + in;
      if (capacitated_ && !capacity_allows(node.parent_cap, bandwidth)) continue;
      node.final_table.val[s] = merged.val[s] + bandwidth * node.parent_cost;
    }
  }

  // Replays the merge chain recorded for (r, state in final table).
  Region build_region(NodeId r, int state) {
    const NodeDp& node = nodes_[r];
    struct Step {
      NodeId child;
      int right_state;
      int m1, m2;
    };
    std::vector<Step> steps;
    int level = static_cast<int>(node.levels.size()) - 1;
    int cur = state;
    while (level > 0) {
      const Back& b = node.levels[level].back[cur];
      assert(b.kind == Back::Kind::kMerge);
      steps.push_back({b.child, b.right_state, b.m1, b.m2});
      cur = b.left_state;
      --level;
    }
    std::reverse(steps.begin(), steps.end());

    Region region;
    const Back& base = node.levels[0].back[cur];
    switch (base.kind) {
      case Back::Kind::kHoldsVnRoot:
        region.holders.emplace_back(r, Region::Role::kVnRoot);
        break;
      case Back::Kind::kHoldsLeaf:
        region.holders.emplace_back(r, Region::Role::kLeaf);
        region.in_slots.push_back(r);
        break;
      case Back::Kind::kHoldsGroupRoot:
        region.holders.emplace_back(r, Region::Role::kGroupRoot);
        region.out_stubs.assign(shape_.group_size, r);
        break;
      default:
        assert(false);
    }
    for (const auto& step : steps) {
      Region child_region = build_region(step.child, step.right_state);
      merge_regions(region, child_region, step.m1, step.m2);
    }
    return region;
  }

  void merge_regions(Region& left, Region& right, int m1, int m2) {
    for (int t = 0; t < m1; ++t) resolved_.emplace_back(left.out_stubs[t], right.in_slots[t]);
    for (int t = 0; t < m2; ++t) resolved_.emplace_back(right.out_stubs[t], left.in_slots[t]);
    Region merged;
    merged.holders = std::move(left.holders);
    merged.holders.insert(merged.holders.end(), right.holders.begin(), right.holders.end());
    merged.out_stubs.assign(left.out_stubs.begin() + m1, left.out_stubs.end());
    merged.out_stubs.insert(merged.out_stubs.end(), right.out_stubs.begin() + m2,
                            right.out_stubs.end());
    merged.in_slots.assign(left.in_slots.begin() + m2, left.in_slots.end());
    merged.in_slots.insert(merged.in_slots.end(), right.in_slots.begin() + m1,
                           right.in_slots.end());
    left = std::move(merged);
  }

  void collect_bandwidth(NodeId r, int state,
                         std::map<std::pair<NodeId, NodeId>, std::int64_t>& out) {
    const NodeDp& node = nodes_[r];
    if (r != root_) {
      int x, o, i;
      ctx_.decode(state, x, o, i);
      auto key = std::minmax(r, node.parent);
      out[key] = static_cast<std::int64_t>(x) * ctx_.root_edge_demand + o + i;
    }
    int level = static_cast<int>(node.levels.size()) - 1;
    int cur = state;
    while (level > 0) {
      const Back& b = node.levels[level].back[cur];
      collect_bandwidth(b.child, b.right_state, out);
      cur = b.left_state;
      --level;
    }
  }

  const Instance& instance_;
  const PhysicalNetwork& pn_;
  const OversubShape& shape_;
  DpContext ctx_;
  bool capacitated_ = false;
  NodeId root_ = -1;
  std::vector<NodeDp> nodes_;
  std::vector<NodeId> postorder_;
  std::vector<std::pair<NodeId, NodeId>> resolved_;  // (group-root vertex, leaf vertex)
};

}  // namespace

SolveResult solve_oversub_2star_on_tree_wcvne(
    const Instance& instance,
    std::map<std::pair<NodeId, NodeId>, std::int64_t>* edge_bandwidth) {
  auto shape = oversub_shape(instance.vn());
  if (!shape) throw std::invalid_argument("virtual network is not an oversubscribed 2-star");
  if (!instance.pn().is_tree()) throw std::invalid_argument("physical network is not a tree");

  const int n = instance.node_count();
  Cost best = kInf;
  NodeId best_root = -1;
  for (NodeId root = 0; root < n; ++root) {
    OversubDp dp(instance, *shape);
    Cost value = dp.run(root);
    if (value < best) {
      best = value;
      best_root = root;
    }
  }
  if (best >= kInf) return SolveResult::infeasible();

  OversubDp dp(instance, *shape);
  dp.run(best_root);
  Embedding witness = dp.reconstruct();
  if (edge_bandwidth) *edge_bandwidth = dp.edge_bandwidth();
  return SolveResult::optimal(best, std::move(witness));
}

}  // namespace vne
