#pragma once

#include <cstdint>
#include <vector>

namespace vne {

struct AssignmentResult {
  std::int64_t total = 0;
  std::vector<int> row_to_col;
};

// Exact minimum-cost perfect assignment on a square matrix, O(n^3)
// potential/augmenting-path method. Deterministic: among equal-cost
// augmenting choices the smallest column index wins.
AssignmentResult solve_assignment(const std::vector<std::vector<std::int64_t>>& cost);

}  // namespace vne
