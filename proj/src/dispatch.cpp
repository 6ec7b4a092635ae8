#include "vne/dispatch.hpp"

#include <array>

#include "vne/topology.hpp"

namespace vne {

namespace {

enum class VnRow { kUniLine, kLine, kUniStar, kStar, kOversub, kTwoStar, kOther };
enum class WvneCol { kGeneric, kTree, kLine, kUniGeneric, kUniTree, kUniLine };
enum class CvneCol { kGeneric, kTree, kLine, kStar };

VnRow vn_row(const TopologyClass& c) {
  switch (c.kind) {
    case TopologyKind::kLine: return c.is_uniform ? VnRow::kUniLine : VnRow::kLine;
    case TopologyKind::kStar: return c.is_uniform ? VnRow::kUniStar : VnRow::kStar;
    case TopologyKind::kOversubTwoStar: return VnRow::kOversub;
    case TopologyKind::kTwoStar: return VnRow::kTwoStar;
    default: return VnRow::kOther;
  }
}

WvneCol wvne_col(const TopologyClass& c) {
  int base;
  switch (c.kind) {
    case TopologyKind::kLine: base = 2; break;
    case TopologyKind::kGeneric: base = 0; break;
    default: base = 1; break;  // every tree shape sits in the tree column
  }
  if (c.is_uniform) base += 3;
  return static_cast<WvneCol>(base);
}

CvneCol cvne_col(const TopologyClass& c) {
  switch (c.kind) {
    case TopologyKind::kLine: return CvneCol::kLine;
    case TopologyKind::kStar: return CvneCol::kStar;
    case TopologyKind::kGeneric: return CvneCol::kGeneric;
    default: return CvneCol::kTree;
  }
}

MatrixCell P(const char* solver) { return {CellStatus::kPoly, solver}; }
MatrixCell N() { return {CellStatus::kNpHard, ""}; }
MatrixCell O() { return {CellStatus::kOpen, ""}; }

// Rows: uni.line, line, uni.star, star, oversubscribed 2-star, 2-star.
const std::array<std::array<MatrixCell, 6>, 6>& wvne_cells() {
  static const std::array<std::array<MatrixCell, 6>, 6> cells = {{
      {N(), P("line-tree"), P("line-tree"), N(), P("line-tree"), P("line-tree")},
      {N(), N(), N(), N(), N(), P("line-identity")},
      {P("star-vn"), P("star-vn"), P("star-vn"), P("star-vn"), P("star-vn"), P("star-vn")},
      {P("star-vn"), P("star-vn"), P("star-vn"), P("star-vn"), P("star-vn"), P("star-vn")},
      {N(), P("oversub-tree"), P("oversub-tree"), N(), P("oversub-tree"), P("oversub-tree")},
      {N(), N(), N(), N(), N(), O()},
  }};
  return cells;
}

const std::array<std::array<MatrixCell, 4>, 6>& cvne_cells() {
  static const std::array<std::array<MatrixCell, 4>, 6> cells = {{
      {N(), P("line-tree"), P("line-tree"), P("star-pn")},
      {N(), N(), N(), P("star-pn")},
      {P("uniform-star-external"), P("uniform-star-external"), P("uniform-star-external"),
       P("star-pn")},
      {N(), N(), N(), P("star-pn")},
      {N(), P("oversub-tree"), P("oversub-tree"), P("star-pn")},
      {N(), N(), N(), P("star-pn")},
  }};
  return cells;
}

}  // namespace

std::string DispatchDecision::label() const {
  switch (status) {
    case CellStatus::kPoly: return solver;
    case CellStatus::kNpHard: return "np-hard (oracle only)";
    case CellStatus::kOpen: return "open";
  }
  return "?";
}

DispatchDecision dispatch(const Instance& instance) {
  const auto vn_class = classify_topology(instance.vn());
  const auto pn_class = classify_topology(instance.pn());
  const VnRow row = vn_row(vn_class);

  MatrixCell cell;
  if (instance.variant() == Variant::kWvne) {
    if (row == VnRow::kOther) {
      // Tree-or-wider virtual networks inherit hardness from their 2-star
      // subclass in every column of the cost-only table.
      cell = N();
    } else {
      cell = wvne_cells()[static_cast<int>(row)][static_cast<int>(wvne_col(pn_class))];
    }
  } else {
    const CvneCol col = cvne_col(pn_class);
    if (row == VnRow::kOther) {
      // The star-column algorithm takes any virtual network; elsewhere the
      // 2-star subclass already makes the cell hard.
      cell = col == CvneCol::kStar ? P("star-pn") : N();
    } else {
      cell = cvne_cells()[static_cast<int>(row)][static_cast<int>(col)];
    }
  }
  return {cell.status, cell.solver};
}

ComplexityMatrix wvne_matrix() {
  ComplexityMatrix m;
  m.title = "wVNE (cost only)";
  m.row_names = {"uni. line", "line", "uni. star", "star", "oversub. 2-star", "2-star"};
  m.col_names = {"generic", "tree", "line", "uni. generic", "uni. tree", "uni. line"};
  for (const auto& row : wvne_cells()) m.cells.emplace_back(row.begin(), row.end());
  return m;
}

ComplexityMatrix cvne_wcvne_matrix() {
  ComplexityMatrix m;
  m.title = "cVNE and wcVNE (capacitated)";
  m.row_names = {"uni. line", "line", "uni. star", "star", "oversub. 2-star", "2-star"};
  m.col_names = {"generic", "tree", "line", "star"};
  for (const auto& row : cvne_cells()) m.cells.emplace_back(row.begin(), row.end());
  return m;
}

}  // namespace vne
