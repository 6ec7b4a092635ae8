#include "doctest.h"

#include <set>

#include "test_util.hpp"
#include "vne/oracle.hpp"
#include "vne/paths.hpp"
#include "vne/topology.hpp"

using namespace vne;
using namespace vnetest;

TEST_CASE("network construction enforces the graph invariants") {
  CHECK_THROWS_AS(VirtualNetwork(2, {{0, 0, 1}}), std::invalid_argument);       // self-loop
  CHECK_THROWS_AS(VirtualNetwork(2, {{0, 1, 1}, {1, 0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(VirtualNetwork(3, {{0, 1, 1}}), std::invalid_argument);       // disconnected
  CHECK_THROWS_AS(VirtualNetwork(2, {{0, 2, 1}}), std::invalid_argument);       // id range
  CHECK_THROWS_AS(VirtualNetwork(2, {{0, 1, -1}}), std::invalid_argument);      // demand
  CHECK_THROWS_AS(PhysicalNetwork(2, {{0, 1, -2, 1}}), std::invalid_argument);  // cost
  CHECK_THROWS_AS(PhysicalNetwork(2, {{0, 1, 1, -3}}), std::invalid_argument);  // capacity
  CHECK_NOTHROW(PhysicalNetwork(2, {{0, 1, 0, kUnbounded}}));
  CHECK_NOTHROW(VirtualNetwork(1, {}));
}

TEST_CASE("instance requires equal node counts") {
  CHECK_THROWS_AS(Instance(gen::uniform_line_vn(3), uniform_line_pn(4), Variant::kWvne),
                  std::invalid_argument);
}

TEST_CASE("classification of the basic families") {
  CHECK(classify_topology(gen::uniform_line_vn(5)).kind == TopologyKind::kLine);
  CHECK(classify_topology(gen::uniform_line_vn(5)).is_uniform);
  CHECK(classify_topology(gen::uniform_line_vn(2)).kind == TopologyKind::kLine);
  CHECK(classify_topology(gen::uniform_line_vn(1)).kind == TopologyKind::kLine);

  CHECK(classify_topology(gen::star_vn({1, 1, 1, 1})).kind == TopologyKind::kStar);
  // A 3-node path is a line first, even though its middle covers all edges.
  CHECK(classify_topology(gen::star_vn({1, 1})).kind == TopologyKind::kLine);

  auto oversub = classify_topology(gen::oversub_vn(2, 3, 1));
  CHECK(oversub.kind == TopologyKind::kOversubTwoStar);
  CHECK(oversub.group_size == 3);
  CHECK(oversub.oversubscription == 1);
  CHECK(oversub.group_count == 2);

  // Uniform 2-star: oversubscription factor equals the group size.
  auto uniform2 = classify_topology(gen::oversub_vn(2, 2, 2));
  CHECK(uniform2.kind == TopologyKind::kOversubTwoStar);
  CHECK(uniform2.is_uniform);

  // Unequal groups make a plain 2-star.
  VirtualNetwork lopsided(6, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {0, 4, 1}, {4, 5, 1}});
  CHECK(classify_topology(lopsided).kind == TopologyKind::kTwoStar);

  // Root demand not dividing the group size: 2-star, not oversubscribed.
  VirtualNetwork bad_ratio(7, {{0, 1, 2}, {1, 2, 1}, {1, 3, 1}, {1, 4, 1},
                               {0, 5, 2}, {5, 6, 1}});
  CHECK(classify_topology(bad_ratio).kind == TopologyKind::kTwoStar);

  // Depth three from every root: tree.
  VirtualNetwork deep(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  CHECK(classify_topology(deep).kind == TopologyKind::kLine);  // still a path
  VirtualNetwork branched(6, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {1, 4, 1}, {0, 5, 1}});
  CHECK(classify_topology(branched).kind == TopologyKind::kTwoStar);  // rooted at 1
  VirtualNetwork deep2(7,
                       {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {1, 6, 1}});
  CHECK(classify_topology(deep2).kind == TopologyKind::kTree);

  PhysicalNetwork cyclic(3, {{0, 1, 1, kUnbounded}, {1, 2, 1, kUnbounded},
                             {0, 2, 1, kUnbounded}});
  CHECK(classify_topology(cyclic).kind == TopologyKind::kGeneric);
}

TEST_CASE("classification is stable over generated family instances") {
  gen::Rng rng(7);
  for (int n = 1; n <= 12; ++n) {
    CHECK(classify_topology(gen::uniform_line_vn(n)).kind == TopologyKind::kLine);
    if (n >= 4) {
      std::vector<Demand> demands(n - 1, 2);
      CHECK(classify_topology(gen::star_vn(demands)).kind == TopologyKind::kStar);
    }
  }
  for (int groups = 1; groups <= 3; ++groups) {
    for (int s = 1; s <= 3; ++s) {
      for (int o = 1; o <= s; ++o) {
        if (s % o != 0) continue;
        auto vn = gen::oversub_vn(groups, s, o);
        auto cls = classify_topology(vn);
        auto shape = oversub_shape(vn);
        REQUIRE(shape.has_value());
        CHECK(shape->group_size == s);
        CHECK(shape->oversubscription == o);
        CHECK(static_cast<int>(shape->group_roots.size()) == groups);
        // Precedence: one group degenerates to a star (or a path), two
        // single-leaf groups to a line; everything else classifies as
        // oversubscribed.
        if (groups == 1 || (groups == 2 && s == 1)) {
          CHECK(cls.kind != TopologyKind::kOversubTwoStar);
        } else {
          CHECK(cls.kind == TopologyKind::kOversubTwoStar);
          CHECK(cls.group_size == s);
          CHECK(cls.oversubscription == o);
        }
      }
    }
  }
}

TEST_CASE("embedding cost on matched lines") {
  auto vn = gen::uniform_line_vn(3);
  Instance inst(vn, uniform_line_pn(3), Variant::kWvne);
  CHECK(embedding_cost(inst, identity_embedding(vn)) == 2);
}

TEST_CASE("embedding cost multiplies demand by path cost") {
  VirtualNetwork vn(3, {{0, 1, 5}, {1, 2, 0}});
  PhysicalNetwork pn(3, {{0, 1, 1, kUnbounded}, {1, 2, 3, kUnbounded}});
  Instance inst(vn, pn, Variant::kWvne);
  Embedding emb;
  emb.node_map = {0, 2, 1};
  emb.paths[{0, 1}] = {0, 1, 2};  // demand 5 over costs 1 + 3
  emb.paths[{1, 2}] = {2, 1};
  CHECK(embedding_cost(inst, emb) == 20);
}

TEST_CASE("a uniform line on a 3-leaf star costs 4") {
  Instance inst(gen::uniform_line_vn(4), uniform_star_pn(4), Variant::kWvne);
  auto result = oracle_wvne(inst);
  CHECK(result.cost == 4);
  CHECK(embedding_cost(inst, *result.witness) == 4);
}

TEST_CASE("edge loads count demand once per traversed edge") {
  auto vn = gen::uniform_line_vn(4);
  Instance inst(vn, uniform_line_pn(4), Variant::kWvne);
  auto loads = edge_loads(inst, identity_embedding(vn));
  for (const auto& [key, load] : loads) CHECK(load == 1);

  // Star routed through the hub: the hub edge carries the whole demand sum.
  VirtualNetwork star = gen::star_vn({2, 3});
  PhysicalNetwork pn(3, {{0, 1, 1, kUnbounded}, {0, 2, 1, kUnbounded}});
  Instance star_inst(star, pn, Variant::kWvne);
  Embedding emb;
  emb.node_map = {1, 0, 2};  // center on a leaf; both edges cross (0,1)
  emb.paths[{0, 1}] = {1, 0};
  emb.paths[{0, 2}] = {1, 0, 2};
  auto star_loads = edge_loads(star_inst, emb);
  CHECK(star_loads[{0, 1}] == 5);
  CHECK(star_loads[{0, 2}] == 3);
}

TEST_CASE("capacity checking") {
  auto vn = gen::uniform_line_vn(3);
  Instance unlimited(vn, uniform_line_pn(3), Variant::kWcvne);
  CHECK(check_capacities(unlimited, identity_embedding(vn)));
  Instance tight(vn, uniform_line_pn(3, 0), Variant::kWcvne);
  CHECK_FALSE(check_capacities(tight, identity_embedding(vn)));
}

TEST_CASE("embedding validation reports each violation") {
  auto vn = gen::uniform_line_vn(3);
  Instance inst(vn, uniform_line_pn(3), Variant::kWvne);
  CHECK(validate_embedding(inst, identity_embedding(vn)).ok());

  Embedding repeated = identity_embedding(vn);
  repeated.node_map = {0, 0, 2};
  auto report = validate_embedding(inst, repeated);
  CHECK_FALSE(report.ok());
  CHECK(report.summary().find("not-a-bijection") != std::string::npos);

  PhysicalNetwork dense(3, {{0, 1, 1, kUnbounded}, {1, 2, 1, kUnbounded},
                            {0, 2, 1, kUnbounded}});
  Instance dense_inst(vn, dense, Variant::kWvne);
  Embedding loopy = identity_embedding(vn);
  loopy.paths[{0, 1}] = {0, 2, 0, 1};
  auto loop_report = validate_embedding(dense_inst, loopy);
  CHECK_FALSE(loop_report.ok());
  CHECK(loop_report.summary().find("path-not-simple") != std::string::npos);

  Embedding wrong_end = identity_embedding(vn);
  wrong_end.paths[{0, 1}] = {0, 2};
  CHECK(validate_embedding(dense_inst, wrong_end).summary().find("path-endpoint-mismatch") !=
        std::string::npos);

  Embedding ghost = identity_embedding(vn);
  ghost.paths[{0, 1}] = {0, 2, 1};
  CHECK(validate_embedding(inst, ghost).summary().find("path-unknown-edge") !=
        std::string::npos);

  Embedding missing = identity_embedding(vn);
  missing.paths.erase({0, 1});
  CHECK(validate_embedding(inst, missing).summary().find("path-missing") != std::string::npos);
}

TEST_CASE("cheapest paths basics") {
  PhysicalNetwork single(2, {{0, 1, 7, kUnbounded}});
  CheapestPaths cp(single);
  CHECK(cp.dist(0, 1) == 7);

  PhysicalNetwork triangle(3, {{0, 1, 1, kUnbounded}, {1, 2, 1, kUnbounded},
                               {0, 2, 3, kUnbounded}});
  CheapestPaths cpt(triangle);
  CHECK(cpt.dist(0, 2) == 2);
  CHECK(cpt.path(0, 2) == std::vector<NodeId>{0, 1, 2});

  // Octopus legs: tips of two legs of length B sit 2B apart.
  const int B = 3, legs = 4;
  std::vector<PnEdge> edges;
  int next = 1;
  std::vector<int> tips;
  for (int l = 0; l < legs; ++l) {
    int prev = 0;
    for (int k = 0; k < B; ++k) {
      edges.push_back({prev, next, 1, kUnbounded});
      prev = next++;
    }
    tips.push_back(prev);
  }
  CheapestPaths cpo(PhysicalNetwork(next, std::move(edges)));
  CHECK(cpo.dist(tips[0], tips[1]) == 2 * B);
}

namespace {

// Every connected graph structure up to 4 nodes, plus random 5- and 6-node
// graphs, with cost patterns that include zero-cost edges.
std::vector<PhysicalNetwork> small_graph_sweep() {
  std::vector<PhysicalNetwork> graphs;
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
      for (int pattern = 0; pattern < 2; ++pattern) {
        std::vector<PnEdge> edges;
        int k = 0;
        for (size_t b = 0; b < pairs.size(); ++b) {
          if (!(mask & (1u << b))) continue;
          Cost cost = pattern == 0 ? 1 : (k * 7 + 3) % 5;  // includes zeros
          edges.push_back({pairs[b].first, pairs[b].second, cost, kUnbounded});
          ++k;
        }
        try {
          graphs.emplace_back(n, std::move(edges));
        } catch (const std::invalid_argument&) {
          break;  // disconnected mask; the cost pattern cannot fix it
        }
      }
    }
  }
  gen::Rng rng(11);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 5 + static_cast<int>(rng() % 2);
    graphs.push_back(gen::random_connected_pn(rng, n, 3, kUnbounded));
  }
  return graphs;
}

}  // namespace

TEST_CASE("cheapest paths agree with exhaustive enumeration on small graphs") {
  for (const auto& pn : small_graph_sweep()) {
    const int n = pn.node_count();
    CheapestPaths cp(pn);
    for (NodeId u = 0; u < n; ++u) {
      CHECK(cp.dist(u, u) == 0);
      for (NodeId v = 0; v < n; ++v) {
        CHECK(cp.dist(u, v) == cp.dist(v, u));
        if (u == v) continue;
        auto paths = all_simple_paths(pn, u, v);
        Cost cheapest = std::numeric_limits<Cost>::max();
        for (const auto& p : paths) cheapest = std::min(cheapest, path_cost(pn, p));
        CHECK(cp.dist(u, v) == cheapest);
        auto reported = cp.path(u, v);
        CHECK(path_cost(pn, reported) == cheapest);
        std::set<NodeId> unique(reported.begin(), reported.end());
        CHECK(unique.size() == reported.size());
        CHECK(reported.front() == u);
        CHECK(reported.back() == v);
        // Lexicographically smallest among the cheapest simple paths.
        std::vector<NodeId> best_lex;
        for (const auto& p : paths) {
          if (path_cost(pn, p) != cheapest) continue;
          if (best_lex.empty() || p < best_lex) best_lex = p;
        }
        CHECK(reported == best_lex);
      }
    }
  }
}

TEST_CASE("triangle inequality holds on the distance matrix") {
  gen::Rng rng(13);
  auto pn = gen::random_connected_pn(rng, 6, 5, kUnbounded);
  CheapestPaths cp(pn);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k) CHECK(cp.dist(i, j) <= cp.dist(i, k) + cp.dist(k, j));
}

TEST_CASE("uniform-cost embedding cost equals total load") {
  // With unit costs, every hop of every request is charged exactly once.
  gen::Rng rng(17);
  for (int iter = 0; iter < 30; ++iter) {
    int n = 3 + static_cast<int>(rng() % 4);
    auto vn = gen::random_connected_vn(rng, n, 4);
    auto shape = gen::random_connected_pn(rng, n, 3, kUnbounded);
    std::vector<PnEdge> unit_edges = shape.edges();
    for (auto& e : unit_edges) e.cost = 1;
    PhysicalNetwork pn(n, std::move(unit_edges));
    Instance inst(vn, pn, Variant::kWvne);
    auto result = oracle_wvne(inst);
    auto loads = edge_loads(inst, *result.witness);
    std::int64_t total = 0;
    for (const auto& [key, load] : loads) total += load;
    CHECK(total == result.cost);
  }
}
