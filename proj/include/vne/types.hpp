#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vne {

using NodeId = int;
using Cost = std::int64_t;
using Demand = std::int64_t;
using Capacity = std::int64_t;

// Capacity sentinel: an edge that accepts any load.
inline constexpr Capacity kUnbounded = -1;

inline bool capacity_allows(Capacity cap, std::int64_t load) {
  return cap == kUnbounded || load <= cap;
}

// Raised when an exhaustive search would exceed its configured budget.
// Budgets fail loudly; results are never silently truncated.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed input files (JSON schema violations and the like).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vne
