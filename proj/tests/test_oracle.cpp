#include "doctest.h"

#include "test_util.hpp"
#include "vne/oracle.hpp"

using namespace vne;
using namespace vnetest;

TEST_CASE("cost-only oracle on lines and near-lines") {
  for (int n = 2; n <= 6; ++n) {
    Instance inst(gen::uniform_line_vn(n), uniform_line_pn(n), Variant::kWvne);
    CHECK(oracle_wvne(inst).cost == n - 1);
  }
  // A cycle contains a spanning path, so the uniform line embeds at n - 1.
  PhysicalNetwork cycle(5, {{0, 1, 1, kUnbounded}, {1, 2, 1, kUnbounded},
                            {2, 3, 1, kUnbounded}, {3, 4, 1, kUnbounded},
                            {0, 4, 1, kUnbounded}});
  Instance on_cycle(gen::uniform_line_vn(5), cycle, Variant::kWvne);
  CHECK(oracle_wvne(on_cycle).cost == 4);

  Instance on_star(gen::uniform_line_vn(4), uniform_star_pn(4), Variant::kWvne);
  CHECK(oracle_wvne(on_star).cost == 4);
}

TEST_CASE("capacitated oracle basics") {
  Instance choked(gen::uniform_line_vn(3), uniform_line_pn(3, 0), Variant::kCvne);
  CHECK_FALSE(oracle_wcvne(choked).feasible());

  Instance fine(gen::uniform_line_vn(3), uniform_line_pn(3, 1), Variant::kWcvne);
  auto result = oracle_wcvne(fine);
  REQUIRE(result.feasible());
  CHECK(result.cost == 2);
  CHECK(check_capacities(fine, *result.witness));
}

TEST_CASE("theta decisions") {
  Instance inst(gen::uniform_line_vn(3), uniform_line_pn(3), Variant::kWvne, Cost{2});
  auto result = oracle_wvne(inst);
  CHECK(decide_theta(inst, result));  // cost 2 <= 2

  Instance strict(gen::uniform_line_vn(3), uniform_line_pn(3), Variant::kWvne, Cost{1});
  CHECK_FALSE(decide_theta(strict, oracle_wvne(strict)));

  Instance no_theta(gen::uniform_line_vn(3), uniform_line_pn(3), Variant::kWvne);
  CHECK_THROWS_AS(decide_theta(no_theta, result), std::invalid_argument);

  Instance infeasible(gen::uniform_line_vn(3), uniform_line_pn(3, 0), Variant::kWcvne, Cost{9});
  CHECK_FALSE(decide_theta(infeasible, oracle_wcvne(infeasible)));
}

TEST_CASE("dropping capacity constraints never raises the optimum") {
  gen::Rng rng(41);
  for (int iter = 0; iter < 80; ++iter) {
    int n = 3 + static_cast<int>(rng() % 3);
    auto vn = gen::random_connected_vn(rng, n, 4);
    auto pn = gen::random_connected_pn(rng, n, 4, 6);
    Instance capacitated(vn, pn, Variant::kWcvne);
    std::vector<PnEdge> free_edges = pn.edges();
    for (auto& e : free_edges) e.capacity = kUnbounded;
    Instance unconstrained(vn, PhysicalNetwork(n, std::move(free_edges)), Variant::kWvne);
    auto relaxed = oracle_wvne(unconstrained);
    auto constrained = oracle_wcvne(capacitated);
    if (constrained.feasible()) {
      CHECK(relaxed.cost <= constrained.cost);
      CHECK(validate_embedding(capacitated, *constrained.witness).ok());
      CHECK(check_capacities(capacitated, *constrained.witness));
    }
    CHECK(validate_embedding(unconstrained, *relaxed.witness).ok());
  }
}

TEST_CASE("oracles agree on trees with unbounded capacities") {
  gen::Rng rng(43);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 2 + static_cast<int>(rng() % 4);
    auto vn = gen::random_connected_vn(rng, n, 3);
    auto pn = gen::random_tree_pn(rng, n, 4, {kUnbounded});
    Instance wvne(vn, pn, Variant::kWvne);
    Instance wcvne(vn, pn, Variant::kWcvne);
    CHECK(oracle_wvne(wvne).cost == oracle_wcvne(wcvne).cost);
  }
}

TEST_CASE("oracle determinism") {
  gen::Rng rng(47);
  auto vn = gen::random_connected_vn(rng, 5, 3);
  auto pn = gen::random_connected_pn(rng, 5, 3, 5);
  Instance inst(vn, pn, Variant::kWcvne);
  auto first = oracle_wcvne(inst);
  auto second = oracle_wcvne(inst);
  REQUIRE(first.feasible() == second.feasible());
  if (first.feasible()) {
    CHECK(first.witness->node_map == second.witness->node_map);
    CHECK(first.witness->paths == second.witness->paths);
  }
  Instance free(vn, pn, Variant::kWvne);
  CHECK(oracle_wvne(free).witness->node_map == oracle_wvne(free).witness->node_map);
}

TEST_CASE("budgets fail loudly") {
  Instance big(gen::uniform_line_vn(9), uniform_line_pn(9), Variant::kWvne);
  CHECK_THROWS_AS(oracle_wvne(big), BudgetError);
  OracleConfig wider;
  wider.max_n = 9;
  CHECK(oracle_wvne(big, wider).cost == 8);

  Instance capacitated(gen::uniform_line_vn(7), uniform_line_pn(7, 2), Variant::kWcvne);
  CHECK_THROWS_AS(oracle_wcvne(capacitated), BudgetError);

  // Path enumeration over a dense graph overruns a tiny path budget.
  gen::Rng rng(53);
  std::vector<PnEdge> dense;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) dense.push_back({u, v, 1, 10});
  Instance clique(gen::random_connected_vn(rng, 6, 2), PhysicalNetwork(6, std::move(dense)),
                  Variant::kWcvne);
  OracleConfig tiny;
  tiny.path_budget = 3;
  CHECK_THROWS_AS(oracle_wcvne(clique, tiny), BudgetError);
}

TEST_CASE("lexicographically smallest optimal node map is reported") {
  // Two symmetric optima: the identity must win.
  Instance inst(gen::uniform_line_vn(4), uniform_line_pn(4), Variant::kWvne);
  auto result = oracle_wvne(inst);
  CHECK(result.witness->node_map == std::vector<NodeId>{0, 1, 2, 3});
}
