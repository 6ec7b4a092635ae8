#include "doctest.h"

#include <set>

#include "test_util.hpp"
#include "vne/dispatch.hpp"
#include "vne/oracle.hpp"
#include "vne/paths.hpp"
#include "vne/solvers.hpp"
#include "vne/topology.hpp"

using namespace vne;
using namespace vnetest;

namespace {

void check_witness(const Instance& inst, const SolveResult& result) {
  REQUIRE(result.feasible());
  REQUIRE(result.witness.has_value());
  CHECK(validate_embedding(inst, *result.witness).ok());
  CHECK(embedding_cost(inst, *result.witness) == result.cost);
  if (inst.capacities_apply()) CHECK(check_capacities(inst, *result.witness));
}

}  // namespace

TEST_CASE("star solver: heavy leaf hugs the center") {
  Instance inst(gen::star_vn({3, 1}), uniform_line_pn(3), Variant::kWvne);
  auto result = solve_star_vn_wvne(inst);
  check_witness(inst, result);
  CHECK(result.cost == 4);
  CHECK(result.cost == oracle_wvne(inst).cost);
}

TEST_CASE("star solver: zero demands cost nothing") {
  gen::Rng rng(3);
  Instance inst(gen::star_vn({0, 0, 0}), gen::random_connected_pn(rng, 4, 5, kUnbounded),
                Variant::kWvne);
  auto result = solve_star_vn_wvne(inst);
  check_witness(inst, result);
  CHECK(result.cost == 0);
}

TEST_CASE("star solver: uniform star onto uniform star pins the hub") {
  for (int n = 3; n <= 6; ++n) {
    std::vector<Demand> demands(n - 1, 1);
    Instance inst(gen::star_vn(demands), uniform_star_pn(n), Variant::kWvne);
    auto result = solve_star_vn_wvne(inst);
    check_witness(inst, result);
    CHECK(result.cost == n - 1);
    CHECK(result.witness->node_map[0] == 0);  // center on the hub
    CHECK(result.cost == oracle_wvne(inst).cost);
  }
}

TEST_CASE("star solver rejects non-star and capacitated inputs") {
  Instance not_star(gen::uniform_line_vn(4), uniform_line_pn(4), Variant::kWvne);
  CHECK_THROWS_AS(solve_star_vn_wvne(not_star), std::invalid_argument);
  Instance capacitated(gen::star_vn({1, 1}), uniform_line_pn(3), Variant::kWcvne);
  CHECK_THROWS_AS(solve_star_vn_wvne(capacitated), std::invalid_argument);
}

TEST_CASE("star solver witness satisfies the rearrangement order") {
  gen::Rng rng(5);
  for (int iter = 0; iter < 120; ++iter) {
    int n = 3 + static_cast<int>(rng() % 5);
    std::vector<Demand> demands;
    for (int i = 0; i < n - 1; ++i) demands.push_back(static_cast<Demand>(rng() % 6));
    Instance inst(gen::star_vn(demands), gen::random_connected_pn(rng, n, 5, kUnbounded),
                  Variant::kWvne);
    auto result = solve_star_vn_wvne(inst);
    check_witness(inst, result);
    CheapestPaths cp(inst.pn());
    NodeId center_at = result.witness->node_map[0];
    // No heavier leaf may sit strictly farther than a lighter one.
    for (size_t i = 1; i < result.witness->node_map.size(); ++i) {
      for (size_t j = 1; j < result.witness->node_map.size(); ++j) {
        Demand wi = demands[i - 1], wj = demands[j - 1];
        Cost di = cp.dist(center_at, result.witness->node_map[i]);
        Cost dj = cp.dist(center_at, result.witness->node_map[j]);
        if (wi > wj) CHECK(di <= dj);
      }
    }
  }
}

TEST_CASE("assignment solver on a star physical network") {
  // Uniform star onto uniform star: hub to hub, one hop per leaf.
  std::vector<Demand> demands(3, 1);
  Instance inst(gen::star_vn(demands), uniform_star_pn(4), Variant::kWcvne);
  auto result = solve_on_star_pn_wcvne(inst);
  check_witness(inst, result);
  CHECK(result.cost == 3);

  // The solver owns star physical networks only.
  Instance line_pn(gen::star_vn({5, 3, 2}), uniform_line_pn(4, 5), Variant::kCvne);
  CHECK_THROWS_AS(solve_on_star_pn_wcvne(line_pn), std::invalid_argument);
}

TEST_CASE("assignment solver: triangle onto a capacitated star") {
  VirtualNetwork triangle(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
  PhysicalNetwork pn(3, {{0, 1, 1, 2}, {0, 2, 4, 2}});
  Instance inst(triangle, pn, Variant::kWcvne);
  auto result = solve_on_star_pn_wcvne(inst);
  check_witness(inst, result);
  CHECK(result.cost == 10);
  CHECK(result.cost == oracle_wcvne(inst).cost);
}

TEST_CASE("assignment solver reports infeasibility from barred placements") {
  VirtualNetwork star = gen::star_vn({4, 4});
  PhysicalNetwork pn(3, {{0, 1, 1, 1}, {0, 2, 1, 1}});  // leaves too small
  Instance inst(star, pn, Variant::kCvne);
  CHECK_FALSE(solve_on_star_pn_wcvne(inst).feasible());
  CHECK_FALSE(oracle_wcvne(inst).feasible());
}

TEST_CASE("line-on-tree: identical lines") {
  for (int n = 2; n <= 6; ++n) {
    Instance inst(gen::uniform_line_vn(n), uniform_line_pn(n, 1), Variant::kWcvne);
    auto result = solve_uniform_line_on_tree_wcvne(inst);
    check_witness(inst, result);
    CHECK(result.cost == n - 1);
  }
}

TEST_CASE("line-on-tree: four nodes onto a 3-leaf star") {
  Instance roomy(gen::uniform_line_vn(4), uniform_star_pn(4, 2), Variant::kWcvne);
  auto result = solve_uniform_line_on_tree_wcvne(roomy);
  check_witness(roomy, result);
  CHECK(result.cost == 4);
  CHECK(result.cost == oracle_wcvne(roomy).cost);

  // Three capacity-1 edges cannot lie on one simple path.
  Instance tight(gen::uniform_line_vn(4), uniform_star_pn(4, 1), Variant::kWcvne);
  CHECK_FALSE(solve_uniform_line_on_tree_wcvne(tight).feasible());
  CHECK_FALSE(oracle_wcvne(tight).feasible());
}

TEST_CASE("line-on-tree rejections") {
  Instance not_line(gen::star_vn({1, 1, 1}), uniform_star_pn(4), Variant::kWcvne);
  CHECK_THROWS_AS(solve_uniform_line_on_tree_wcvne(not_line), std::invalid_argument);
  VirtualNetwork weighted_line(3, {{0, 1, 2}, {1, 2, 1}});
  Instance not_uniform(weighted_line, uniform_line_pn(3), Variant::kWcvne);
  CHECK_THROWS_AS(solve_uniform_line_on_tree_wcvne(not_uniform), std::invalid_argument);
  PhysicalNetwork cyclic(3, {{0, 1, 1, kUnbounded}, {1, 2, 1, kUnbounded},
                             {0, 2, 1, kUnbounded}});
  Instance not_tree(gen::uniform_line_vn(3), cyclic, Variant::kWcvne);
  CHECK_THROWS_AS(solve_uniform_line_on_tree_wcvne(not_tree), std::invalid_argument);
}

TEST_CASE("line-on-tree walk crosses spine edges once and others twice") {
  gen::Rng rng(23);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 3 + static_cast<int>(rng() % 4);
    auto pn = gen::random_tree_pn(rng, n, 5, {1, 1, 2, 2, 3, kUnbounded});
    Instance inst(gen::uniform_line_vn(n), pn, Variant::kWcvne);
    auto result = solve_uniform_line_on_tree_wcvne(inst);
    if (!result.feasible()) continue;
    check_witness(inst, result);
    const auto& node_map = result.witness->node_map;
    auto order = line_order(inst.vn());
    NodeId start = node_map[order->front()], finish = node_map[order->back()];
    auto spine = all_simple_paths(pn, start, finish).at(0);  // unique on a tree
    std::set<std::pair<NodeId, NodeId>> on_spine;
    for (size_t i = 1; i < spine.size(); ++i)
      on_spine.insert(std::minmax(spine[i - 1], spine[i]));
    auto loads = edge_loads(inst, *result.witness);
    for (const auto& [key, load] : loads)
      CHECK(load == (on_spine.count(key) ? 1 : 2));
  }
}

TEST_CASE("oversubscribed solver: identity onto the matching tree") {
  auto vn = gen::oversub_vn(2, 2, 2);  // uniform 2-star, 7 nodes
  std::vector<PnEdge> edges;
  for (const auto& e : vn.edges()) edges.push_back({e.u, e.v, 1, kUnbounded});
  Instance inst(vn, PhysicalNetwork(vn.node_count(), std::move(edges)), Variant::kWcvne);
  auto result = solve_oversub_2star_on_tree_wcvne(inst);
  check_witness(inst, result);
  CHECK(result.cost == static_cast<Cost>(vn.edges().size()));
  OracleConfig config;
  config.max_n = 7;
  CHECK(result.cost == oracle_wcvne(inst, config).cost);
}

TEST_CASE("oversubscribed solver: one group on a path") {
  auto vn = gen::oversub_vn(1, 2, 1);
  Instance inst(vn, uniform_line_pn(4), Variant::kWcvne);
  auto result = solve_oversub_2star_on_tree_wcvne(inst);
  check_witness(inst, result);
  CHECK(result.cost == 5);
  CHECK(result.cost == oracle_wcvne(inst).cost);

  Instance choked(vn, uniform_line_pn(4, 1), Variant::kWcvne);
  CHECK_FALSE(solve_oversub_2star_on_tree_wcvne(choked).feasible());
  CHECK_FALSE(oracle_wcvne(choked).feasible());
}

TEST_CASE("oversubscribed solver rejections") {
  Instance not_oversub(gen::uniform_line_vn(4), uniform_line_pn(4), Variant::kWcvne);
  CHECK_THROWS_AS(solve_oversub_2star_on_tree_wcvne(not_oversub), std::invalid_argument);
  // Unequal groups.
  VirtualNetwork lopsided(6, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {0, 4, 1}, {4, 5, 1}});
  Instance unequal(lopsided, uniform_line_pn(6), Variant::kWcvne);
  CHECK_THROWS_AS(solve_oversub_2star_on_tree_wcvne(unequal), std::invalid_argument);
  PhysicalNetwork cyclic(7, {{0, 1, 1, kUnbounded}, {1, 2, 1, kUnbounded},
                             {2, 3, 1, kUnbounded}, {3, 4, 1, kUnbounded},
                             {4, 5, 1, kUnbounded}, {5, 6, 1, kUnbounded},
                             {0, 6, 1, kUnbounded}});
  Instance not_tree(gen::oversub_vn(2, 2, 2), cyclic, Variant::kWcvne);
  CHECK_THROWS_AS(solve_oversub_2star_on_tree_wcvne(not_tree), std::invalid_argument);
}

TEST_CASE("oversubscribed solver: recorded bandwidth matches witness loads") {
  gen::Rng rng(29);
  int checked = 0;
  for (int iter = 0; iter < 150; ++iter) {
    int groups = 1 + static_cast<int>(rng() % 2);
    int s = 1 + static_cast<int>(rng() % 3);
    std::vector<int> divisors;
    for (int o = 1; o <= s; ++o)
      if (s % o == 0) divisors.push_back(o);
    int o = divisors[rng() % divisors.size()];
    auto vn = gen::oversub_vn(groups, s, o);
    if (vn.node_count() > 7) continue;
    auto pn = gen::random_tree_pn(rng, vn.node_count(), 5, {0, 1, 2, 3, 6, 12, kUnbounded});
    Instance inst(vn, pn, Variant::kWcvne);
    std::map<std::pair<NodeId, NodeId>, std::int64_t> bandwidth;
    auto result = solve_oversub_2star_on_tree_wcvne(inst, &bandwidth);
    if (!result.feasible()) continue;
    ++checked;
    check_witness(inst, result);
    auto loads = edge_loads(inst, *result.witness);
    for (const auto& e : pn.edges()) {
      auto key = std::make_pair(e.u, e.v);
      CHECK(loads[key] == bandwidth[key]);
      if (e.capacity != kUnbounded) CHECK(bandwidth[key] <= e.capacity);
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("line identity on a uniform line") {
  VirtualNetwork vn(4, {{0, 1, 5}, {1, 2, 0}, {2, 3, 7}});
  Instance inst(vn, uniform_line_pn(4), Variant::kWvne);
  auto result = solve_line_on_uniform_line_wvne(inst);
  check_witness(inst, result);
  CHECK(result.cost == 12);
  CHECK(result.cost == oracle_wvne(inst).cost);
}

TEST_CASE("mini oracle-equivalence sweeps") {
  gen::Rng rng(31);
  SUBCASE("star virtual networks, any physical network") {
    for (int iter = 0; iter < 60; ++iter) {
      int n = 3 + static_cast<int>(rng() % 5);
      std::vector<Demand> demands;
      for (int i = 0; i < n - 1; ++i) demands.push_back(static_cast<Demand>(rng() % 6));
      Instance inst(gen::star_vn(demands), gen::random_connected_pn(rng, n, 5, kUnbounded),
                    Variant::kWvne);
      CHECK(solve_star_vn_wvne(inst).cost == oracle_wvne(inst).cost);
    }
  }
  SUBCASE("anything on a star physical network") {
    for (int iter = 0; iter < 60; ++iter) {
      int n = 3 + static_cast<int>(rng() % 4);
      Instance inst(gen::random_connected_vn(rng, n, 5),
                    gen::random_star_pn(rng, n, 5, 12), Variant::kWcvne);
      auto fast = solve_on_star_pn_wcvne(inst);
      auto slow = oracle_wcvne(inst);
      CHECK(fast.feasible() == slow.feasible());
      if (fast.feasible()) CHECK(fast.cost == slow.cost);
    }
  }
  SUBCASE("uniform lines on trees") {
    for (int iter = 0; iter < 60; ++iter) {
      int n = 3 + static_cast<int>(rng() % 4);
      Instance inst(gen::uniform_line_vn(n),
                    gen::random_tree_pn(rng, n, 5, {0, 1, 2, 3}), Variant::kWcvne);
      auto fast = solve_uniform_line_on_tree_wcvne(inst);
      auto slow = oracle_wcvne(inst);
      CHECK(fast.feasible() == slow.feasible());
      if (fast.feasible()) CHECK(fast.cost == slow.cost);
    }
  }
  SUBCASE("oversubscribed 2-stars on trees") {
    OracleConfig config;
    config.max_n = 7;
    for (int iter = 0; iter < 40; ++iter) {
      int groups = 1 + static_cast<int>(rng() % 2);
      int s = 1 + static_cast<int>(rng() % 3);
      std::vector<int> divisors;
      for (int o = 1; o <= s; ++o)
        if (s % o == 0) divisors.push_back(o);
      int o = divisors[rng() % divisors.size()];
      auto vn = gen::oversub_vn(groups, s, o);
      if (vn.node_count() > 7) continue;
      auto pn = gen::random_tree_pn(rng, vn.node_count(), 5, {0, 1, 2, 3, 6, 12, kUnbounded});
      Instance inst(vn, pn, Variant::kWcvne);
      auto fast = solve_oversub_2star_on_tree_wcvne(inst);
      auto slow = oracle_wcvne(inst, config);
      CHECK(fast.feasible() == slow.feasible());
      if (fast.feasible()) CHECK(fast.cost == slow.cost);
    }
  }
}

TEST_CASE("dispatch follows the published tables") {
  Instance line_tree(
      gen::uniform_line_vn(5),
      pn_of(5, {{0, 1, 2, 1}, {1, 2, 1, 2}, {1, 3, 1, 1}, {3, 4, 2, 2}}), Variant::kWcvne);
  CHECK(dispatch(line_tree).label() == "line-tree");

  gen::Rng rng(37);
  PhysicalNetwork generic(4, {{0, 1, 1, kUnbounded}, {1, 2, 1, kUnbounded},
                              {2, 3, 1, kUnbounded}, {0, 3, 1, kUnbounded}});
  Instance star_generic(gen::star_vn({2, 1, 1}), generic, Variant::kCvne);
  CHECK(dispatch(star_generic).label() == "np-hard (oracle only)");

  // 2-star VN on a uniform line, cost-only: the open cell.
  VirtualNetwork two_star(5, {{0, 1, 2}, {1, 2, 1}, {1, 3, 1}, {0, 4, 3}});
  CHECK(classify_topology(two_star).kind == TopologyKind::kTwoStar);
  Instance open_cell(two_star, uniform_line_pn(5), Variant::kWvne);
  CHECK(dispatch(open_cell).label() == "open");
  CHECK(dispatch(open_cell).status == CellStatus::kOpen);

  // Star physical networks take any virtual network in capacitated variants.
  Instance any_on_star(gen::random_connected_vn(rng, 5, 3),
                       gen::random_star_pn(rng, 5, 3, 9), Variant::kWcvne);
  CHECK(dispatch(any_on_star).label() == "star-pn");

  Instance weighted_line_on_uniform(VirtualNetwork(3, {{0, 1, 4}, {1, 2, 2}}),
                                    uniform_line_pn(3), Variant::kWvne);
  CHECK(dispatch(weighted_line_on_uniform).label() == "line-identity");

  std::vector<Demand> unit(3, 1);
  Instance uniform_star_generic(gen::star_vn(unit), generic, Variant::kCvne);
  CHECK(dispatch(uniform_star_generic).label() == "uniform-star-external");
}

TEST_CASE("matrix dimensions and key cells") {
  auto t1 = wvne_matrix();
  auto t2 = cvne_wcvne_matrix();
  CHECK(t1.cells.size() == 6);
  CHECK(t1.cells[0].size() == 6);
  CHECK(t2.cells.size() == 6);
  CHECK(t2.cells[0].size() == 4);
  // The single open cell sits at (2-star, uniform line).
  int open_count = 0;
  for (const auto& row : t1.cells)
    for (const auto& cell : row) open_count += cell.status == CellStatus::kOpen;
  for (const auto& row : t2.cells)
    for (const auto& cell : row) open_count += cell.status == CellStatus::kOpen;
  CHECK(open_count == 1);
  CHECK(t1.cells[5][5].status == CellStatus::kOpen);
  CHECK(t1.cells[0][1].solver == "line-tree");
  CHECK(t2.cells[3][3].solver == "star-pn");
  CHECK(t2.cells[3][0].status == CellStatus::kNpHard);
}
