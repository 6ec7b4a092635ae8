#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "test_util.hpp"
#include "vne/oracle.hpp"
#include "vne/solvers.hpp"

using namespace vne;
using namespace vnetest;

namespace {

// Test-side exhaustive reference for the cost-only problem: all bijections,
// each edge on its cheapest distance, no pruning at all. Returns the optimal
// cost and the lexicographically smallest optimal node map.
std::pair<Cost, std::vector<NodeId>> naive_wvne(const Instance& inst) {
  const int n = inst.node_count();
  std::vector<std::vector<Cost>> dist(n, std::vector<Cost>(n, 0));
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u == v) continue;
      Cost best = std::numeric_limits<Cost>::max();
      for (const auto& p : all_simple_paths(inst.pn(), u, v))
        best = std::min(best, path_cost(inst.pn(), p));
      dist[u][v] = best;
    }
  }
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Cost best = std::numeric_limits<Cost>::max();
  std::vector<NodeId> best_map;
  do {
    Cost total = 0;
    for (const auto& e : inst.vn().edges()) total += e.demand * dist[perm[e.u]][perm[e.v]];
    if (total < best) {
      best = total;
      best_map = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best, best_map};
}

// Test-side exhaustive reference for the capacitated problem: all bijections
// and all per-edge simple-path combinations, checked against capacities.
std::pair<bool, Cost> naive_wcvne(const Instance& inst) {
  const int n = inst.node_count();
  const auto& edges = inst.vn().edges();
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  bool feasible = false;
  Cost best = std::numeric_limits<Cost>::max();
  do {
    std::vector<std::vector<std::vector<NodeId>>> choices;
    for (const auto& e : edges)
      choices.push_back(all_simple_paths(inst.pn(), perm[e.u], perm[e.v]));
    std::vector<size_t> pick(edges.size(), 0);
    while (true) {
      std::map<std::pair<NodeId, NodeId>, std::int64_t> load;
      Cost total = 0;
      bool ok = true;
      for (size_t k = 0; k < edges.size(); ++k) {
        const auto& p = choices[k][pick[k]];
        total += edges[k].demand * path_cost(inst.pn(), p);
        for (size_t i = 1; i < p.size(); ++i)
          load[std::minmax(p[i - 1], p[i])] += edges[k].demand;
      }
      for (const auto& e : inst.pn().edges())
        ok &= capacity_allows(e.capacity, load[{e.u, e.v}]);
      if (ok) {
        feasible = true;
        best = std::min(best, total);
      }
      size_t k = 0;
      while (k < edges.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
      if (k == edges.size()) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {feasible, best};
}

}  // namespace

TEST_CASE("cost-only oracle equals a pruning-free reference search") {
  gen::Rng rng(101);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 2 + static_cast<int>(rng() % 4);  // 2..5
    auto vn = gen::random_connected_vn(rng, n, 5);
    auto pn = gen::random_connected_pn(rng, n, 4, kUnbounded);
    Instance inst(vn, pn, Variant::kWvne);
    auto [want_cost, want_map] = naive_wvne(inst);
    auto got = oracle_wvne(inst);
    CHECK(got.cost == want_cost);
    CHECK(got.witness->node_map == want_map);
  }
}

TEST_CASE("capacitated oracle equals a pruning-free reference search") {
  gen::Rng rng(103);
  int infeasible_seen = 0;
  for (int iter = 0; iter < 50; ++iter) {
    int n = 2 + static_cast<int>(rng() % 3);  // 2..4
    auto vn = gen::random_connected_vn(rng, n, 3);
    auto pn = gen::random_connected_pn(rng, n, 3, 4);
    Instance inst(vn, pn, Variant::kWcvne);
    auto [want_feasible, want_cost] = naive_wcvne(inst);
    auto got = oracle_wcvne(inst);
    CHECK(got.feasible() == want_feasible);
    if (want_feasible) CHECK(got.cost == want_cost);
    infeasible_seen += !want_feasible;
  }
  CHECK(infeasible_seen > 0);  // the sweep must exercise both verdicts
}

TEST_CASE("subtree solver holds up beyond the small sweep sizes") {
  gen::Rng rng(107);
  OracleConfig config;
  config.max_n = 10;
  int solved = 0;
  for (int iter = 0; iter < 6; ++iter) {
    int groups, s, o;
    switch (iter % 3) {
      case 0: groups = 3, s = 2, o = 1; break;   // n = 10
      case 1: groups = 3, s = 2, o = 2; break;   // n = 10, uniform
      default: groups = 2, s = 3, o = 3; break;  // n = 9
    }
    auto vn = gen::oversub_vn(groups, s, o);
    auto pn = gen::random_tree_pn(rng, vn.node_count(), 4, {1, 2, 3, 6, 12, kUnbounded});
    Instance inst(vn, pn, Variant::kWcvne);
    auto fast = solve_oversub_2star_on_tree_wcvne(inst);
    auto slow = oracle_wcvne(inst, config);
    CHECK(fast.feasible() == slow.feasible());
    if (fast.feasible()) {
      CHECK(fast.cost == slow.cost);
      CHECK(validate_embedding(inst, *fast.witness).ok());
      CHECK(check_capacities(inst, *fast.witness));
      CHECK(embedding_cost(inst, *fast.witness) == fast.cost);
      ++solved;
    }
  }
  CHECK(solved > 0);
}

TEST_CASE("line walker holds up on wider trees") {
  gen::Rng rng(109);
  OracleConfig config;
  config.max_n = 8;
  for (int iter = 0; iter < 30; ++iter) {
    int n = 7 + static_cast<int>(rng() % 2);
    Instance inst(gen::uniform_line_vn(n), gen::random_tree_pn(rng, n, 5, {0, 1, 2, 3}),
                  Variant::kWcvne);
    auto fast = solve_uniform_line_on_tree_wcvne(inst);
    auto slow = oracle_wcvne(inst, config);
    CHECK(fast.feasible() == slow.feasible());
    if (fast.feasible()) CHECK(fast.cost == slow.cost);
  }
}

TEST_CASE("assignment solver holds up with zero costs and tight capacities") {
  gen::Rng rng(113);
  for (int iter = 0; iter < 80; ++iter) {
    int n = 4 + static_cast<int>(rng() % 3);
    auto vn = gen::random_connected_vn(rng, n, 4);
    auto pn = gen::random_star_pn(rng, n, 2, 6);  // low costs force ties
    Instance inst(vn, pn, Variant::kWcvne);
    auto fast = solve_on_star_pn_wcvne(inst);
    auto slow = oracle_wcvne(inst);
    CHECK(fast.feasible() == slow.feasible());
    if (fast.feasible()) CHECK(fast.cost == slow.cost);
  }
}
