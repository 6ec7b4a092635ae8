#pragma once

#include <optional>

#include "vne/embedding.hpp"

namespace vne {

struct SolveResult {
  enum class Status { kOptimal, kInfeasible };

  Status status = Status::kInfeasible;
  Cost cost = 0;                     // meaningful when optimal
  std::optional<Embedding> witness;  // present when optimal

  bool feasible() const { return status == Status::kOptimal; }

  static SolveResult optimal(Cost cost, Embedding witness) {
    SolveResult r;
    r.status = Status::kOptimal;
    r.cost = cost;
    r.witness = std::move(witness);
    return r;
  }
  static SolveResult infeasible() { return {}; }
};

}  // namespace vne
