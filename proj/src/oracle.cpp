#include "vne/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "vne/paths.hpp"

namespace vne {

namespace {

constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;

int effective_max_n(const OracleConfig& config, bool capacitated) {
  if (config.max_n < 0 || config.path_budget < 1)
    throw std::invalid_argument("oracle budgets must be positive");
  if (config.max_n > 0) return config.max_n;
  return capacitated ? OracleConfig::kDefaultMaxNWcvne : OracleConfig::kDefaultMaxNWvne;
}

// Shared search scaffolding: assign virtual vertices one by one, closing the
// cost of every virtual edge when its second endpoint lands.
struct WvneSearch {
  const Instance& instance;
  const CheapestPaths& cp;
  int n;
  std::vector<NodeId> assign;       // virtual -> physical, -1 while open
  std::vector<char> used;           // physical occupied
  Cost best = kInf;
  std::vector<NodeId> best_assign;

  WvneSearch(const Instance& inst, const CheapestPaths& paths)
      : instance(inst), cp(paths), n(inst.node_count()), assign(n, -1), used(n, 0) {}

  Cost placement_cost(NodeId u, NodeId p) const {
    Cost added = 0;
    for (const auto& [nbr, idx] : instance.vn().adjacent(u)) {
      if (assign[nbr] >= 0)
        added += instance.vn().edges()[idx].demand * cp.dist(assign[nbr], p);
    }
    return added;
  }

  // Admissible bound for edges with exactly one placed endpoint: each must
  // eventually reach some unused physical vertex.
  Cost frontier_bound() const {
    Cost bound = 0;
    for (const auto& e : instance.vn().edges()) {
      bool pu = assign[e.u] >= 0, pv = assign[e.v] >= 0;
      if (pu == pv || e.demand == 0) continue;
      NodeId at = pu ? assign[e.u] : assign[e.v];
      Cost nearest = kInf;
      for (NodeId q = 0; q < n; ++q)
        if (!used[q]) nearest = std::min(nearest, cp.dist(at, q));
      if (nearest < kInf) bound += e.demand * nearest;
    }
    return bound;
  }

  // Phase 1: vertices in a connectivity-first order, candidates cheapest
  // first, pruning subtrees that cannot beat the incumbent. Finds the
  // optimal value quickly; the witness is settled in phase 2.
  void find_value(const std::vector<NodeId>& order, size_t depth, Cost partial) {
    if (partial + frontier_bound() >= best) return;
    if (depth == order.size()) {
      best = partial;
      best_assign = assign;
      return;
    }
    NodeId u = order[depth];
    std::vector<std::pair<Cost, NodeId>> candidates;
    for (NodeId p = 0; p < n; ++p)
      if (!used[p]) candidates.emplace_back(placement_cost(u, p), p);
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [added, p] : candidates) {
      if (partial + added >= best) break;
      assign[u] = p;
      used[p] = 1;
      find_value(order, depth + 1, partial + added);
      used[p] = 0;
      assign[u] = -1;
    }
  }

  // Phase 2: natural vertex order, ascending candidates, bound pinned to the
  // optimum; the first complete assignment is the lexicographically smallest
  // optimal node map.
  bool find_lex_witness(int depth, Cost partial, Cost target) {
    if (partial + frontier_bound() > target) return false;
    if (depth == n) return partial == target;
    for (NodeId p = 0; p < n; ++p) {
      if (used[p]) continue;
      Cost added = placement_cost(depth, p);
      if (partial + added > target) continue;
      assign[depth] = p;
      used[p] = 1;
      if (find_lex_witness(depth + 1, partial + added, target)) return true;
      used[p] = 0;
      assign[depth] = -1;
    }
    return false;
  }
};

std::vector<NodeId> bfs_order(const VirtualNetwork& vn) {
  std::vector<NodeId> order;
  std::vector<char> seen(vn.node_count(), 0);
  order.push_back(0);
  seen[0] = 1;
  for (size_t i = 0; i < order.size(); ++i) {
    for (const auto& [v, idx] : vn.adjacent(order[i])) {
      if (!seen[v]) {
        seen[v] = 1;
        order.push_back(v);
      }
    }
  }
  return order;
}

}  // namespace

SolveResult oracle_wvne(const Instance& instance, const OracleConfig& config) {
  const int n = instance.node_count();
  if (n > effective_max_n(config, false))
    throw BudgetError("oracle_wvne: instance size " + std::to_string(n) +
                      " exceeds node budget " +
                      std::to_string(effective_max_n(config, false)));
  CheapestPaths cp(instance.pn());

  WvneSearch search(instance, cp);
  search.find_value(bfs_order(instance.vn()), 0, 0);
  Cost optimum = search.best;

  WvneSearch lex(instance, cp);
  lex.best = kInf;
  bool ok = lex.find_lex_witness(0, 0, optimum);
  if (!ok) throw std::logic_error("oracle_wvne: witness reconstruction failed");

  Embedding emb;
  emb.node_map = lex.assign;
  for (const auto& e : instance.vn().edges())
    emb.paths[{e.u, e.v}] = cp.path(emb.node_map[e.u], emb.node_map[e.v]);
  return SolveResult::optimal(optimum, std::move(emb));
}

namespace {

// All simple paths between two vertices, lexicographic by node sequence.
std::vector<std::vector<NodeId>> simple_paths(const PhysicalNetwork& pn, NodeId from, NodeId to,
                                              std::int64_t budget) {
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> path{from};
  std::vector<char> visited(pn.node_count(), 0);
  visited[from] = 1;
  auto dfs = [&](auto&& self, NodeId cur) -> void {
    if (cur == to) {
      if (static_cast<std::int64_t>(out.size()) >= budget)
        throw BudgetError("oracle_wcvne: simple-path budget exceeded");
      out.push_back(path);
      return;
    }
    for (const auto& [next, idx] : pn.adjacent(cur)) {
      if (visited[next]) continue;
      visited[next] = 1;
      path.push_back(next);
      self(self, next);
      path.pop_back();
      visited[next] = 0;
    }
  };
  dfs(dfs, from);
  return out;
}

struct WcvneSearch {
  const Instance& instance;
  const CheapestPaths& cp;
  std::int64_t path_budget;
  int n;
  bool capacitated;

  std::vector<NodeId> assign;
  std::vector<char> used;
  std::vector<std::int64_t> load;             // per physical edge index
  std::vector<const std::vector<NodeId>*> chosen_paths;  // per virtual edge index
  std::map<std::pair<NodeId, NodeId>, std::vector<std::vector<NodeId>>> path_cache;

  Cost best = kInf;
  std::vector<NodeId> best_assign;
  std::vector<std::vector<NodeId>> best_paths;

  WcvneSearch(const Instance& inst, const CheapestPaths& paths, std::int64_t budget)
      : instance(inst),
        cp(paths),
        path_budget(budget),
        n(inst.node_count()),
        capacitated(inst.capacities_apply()),
        assign(n, -1),
        used(n, 0),
        load(inst.pn().edges().size(), 0),
        chosen_paths(inst.vn().edges().size(), nullptr) {}

  const std::vector<std::vector<NodeId>>& paths_between(NodeId a, NodeId b) {
    auto key = std::make_pair(a, b);
    auto it = path_cache.find(key);
    if (it != path_cache.end()) return it->second;
    return path_cache.emplace(key, simple_paths(instance.pn(), a, b, path_budget)).first->second;
  }

  Cost path_cost(const std::vector<NodeId>& p) const {
    Cost c = 0;
    for (size_t i = 1; i < p.size(); ++i) {
      int idx = instance.pn().edge_index(p[i - 1], p[i]);
      c += instance.pn().edges()[idx].cost;
    }
    return c;
  }

  // Cheapest-distance bound over edges not yet routed.
  Cost remaining_bound(size_t edge_from) const {
    Cost bound = 0;
    const auto& edges = instance.vn().edges();
    for (size_t k = edge_from; k < edges.size(); ++k)
      bound += edges[k].demand * cp.dist(assign[edges[k].u], assign[edges[k].v]);
    return bound;
  }

  void route_edges(size_t k, Cost partial) {
    const auto& edges = instance.vn().edges();
    if (partial + remaining_bound(k) >= best) return;
    if (k == edges.size()) {
      best = partial;
      best_assign = assign;
      best_paths.clear();
      for (const auto* p : chosen_paths) best_paths.push_back(*p);
      return;
    }
    const auto& e = edges[k];
    for (const auto& p : paths_between(assign[e.u], assign[e.v])) {
      bool fits = true;
      if (capacitated) {
        for (size_t i = 1; i < p.size() && fits; ++i) {
          int idx = instance.pn().edge_index(p[i - 1], p[i]);
          fits = capacity_allows(instance.pn().edges()[idx].capacity, load[idx] + e.demand);
        }
      }
      if (!fits) continue;
      for (size_t i = 1; i < p.size(); ++i)
        load[instance.pn().edge_index(p[i - 1], p[i])] += e.demand;
      chosen_paths[k] = &p;
      route_edges(k + 1, partial + e.demand * path_cost(p));
      chosen_paths[k] = nullptr;
      for (size_t i = 1; i < p.size(); ++i)
        load[instance.pn().edge_index(p[i - 1], p[i])] -= e.demand;
    }
  }

  // Bound for a partial bijection, capacities ignored (admissible).
  Cost bijection_bound() const {
    Cost bound = 0;
    for (const auto& e : instance.vn().edges()) {
      bool pu = assign[e.u] >= 0, pv = assign[e.v] >= 0;
      if (pu && pv) {
        bound += e.demand * cp.dist(assign[e.u], assign[e.v]);
      } else if (pu != pv) {
        NodeId at = pu ? assign[e.u] : assign[e.v];
        Cost nearest = kInf;
        for (NodeId q = 0; q < n; ++q)
          if (!used[q]) nearest = std::min(nearest, cp.dist(at, q));
        if (nearest < kInf) bound += e.demand * nearest;
      }
    }
    return bound;
  }

  void enumerate(int depth) {
    if (bijection_bound() >= best) return;
    if (depth == n) {
      route_edges(0, 0);
      return;
    }
    for (NodeId p = 0; p < n; ++p) {
      if (used[p]) continue;
      assign[depth] = p;
      used[p] = 1;
      enumerate(depth + 1);
      used[p] = 0;
      assign[depth] = -1;
    }
  }
};

}  // namespace

SolveResult oracle_wcvne(const Instance& instance, const OracleConfig& config) {
  const int n = instance.node_count();
  if (n > effective_max_n(config, true))
    throw BudgetError("oracle_wcvne: instance size " + std::to_string(n) +
                      " exceeds node budget " +
                      std::to_string(effective_max_n(config, true)));
  CheapestPaths cp(instance.pn());
  WcvneSearch search(instance, cp, config.path_budget);
  search.enumerate(0);
  if (search.best >= kInf) return SolveResult::infeasible();

  Embedding emb;
  emb.node_map = search.best_assign;
  const auto& edges = instance.vn().edges();
  for (size_t k = 0; k < edges.size(); ++k)
    emb.paths[{edges[k].u, edges[k].v}] = search.best_paths[k];
  return SolveResult::optimal(search.best, std::move(emb));
}

bool decide_theta(const Instance& instance, const SolveResult& result) {
  if (!instance.theta()) throw std::invalid_argument("decide_theta: instance carries no theta");
  if (!result.feasible()) return false;
  if (instance.variant() == Variant::kCvne) return true;  // no cost bound in this variant
  return result.cost <= *instance.theta();
}

}  // namespace vne
