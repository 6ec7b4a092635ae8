#pragma once

#include <string>
#include <vector>

#include "vne/instance.hpp"

namespace vne {

enum class CellStatus { kPoly, kNpHard, kOpen };

struct DispatchDecision {
  CellStatus status = CellStatus::kNpHard;
  std::string solver;  // set when status == kPoly

  // "np-hard (oracle only)", "open", or the solver name.
  std::string label() const;
};

// Routes an instance to its complexity cell by virtual-network row,
// physical-network column, and variant. Solver tokens:
//   star-vn, star-pn, line-tree, oversub-tree, line-identity,
//   uniform-star-external (polynomial per published work outside this
//   code base; the solve command falls back to the oracle for it).
DispatchDecision dispatch(const Instance& instance);

struct MatrixCell {
  CellStatus status = CellStatus::kNpHard;
  std::string solver;
};

struct ComplexityMatrix {
  std::string title;
  std::vector<std::string> row_names;
  std::vector<std::string> col_names;
  std::vector<std::vector<MatrixCell>> cells;
};

// The two dispatch tables: cost-only, and capacitated (shared by the
// capacity-only and combined variants).
ComplexityMatrix wvne_matrix();
ComplexityMatrix cvne_wcvne_matrix();

}  // namespace vne
