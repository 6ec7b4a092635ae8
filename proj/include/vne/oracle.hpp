#pragma once

#include "vne/instance.hpp"
#include "vne/solve.hpp"

namespace vne {

// Budgets for the exhaustive solvers. Exceeding a budget raises
// BudgetError; results are never silently truncated.
struct OracleConfig {
  int max_n = 0;                      // 0 picks the per-operation default
  std::int64_t path_budget = 10000;   // simple paths enumerated per node pair

  static constexpr int kDefaultMaxNWvne = 8;
  static constexpr int kDefaultMaxNWcvne = 6;
};

// Exact cost-only optimum: every bijection, each virtual edge routed on the
// deterministic cheapest path. Branch-and-bound prunes on an admissible
// partial-cost bound and never changes the reported optimum. The witness
// carries the lexicographically smallest optimal node map.
SolveResult oracle_wvne(const Instance& instance, const OracleConfig& config = {});

// Exact optimum under capacities: every bijection, backtracking over
// per-edge simple-path choices with running capacity accounting.
// On cost-free variants (cvne) the minimum-cost feasible embedding is still
// the one reported.
SolveResult oracle_wcvne(const Instance& instance, const OracleConfig& config = {});

// Decision bound check. Requires instance.theta(); for the capacity-only
// variant feasibility alone decides.
bool decide_theta(const Instance& instance, const SolveResult& result);

}  // namespace vne
