#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "leapers/move_graph.hpp"
#include "leapers/tour.hpp"

namespace leapers {

/// Necessary conditions for a tour to exist. Failing any one proves
/// nonexistence; passing all of them proves nothing.
enum class Check { ColorParity, BipartiteBalance, MinDegree, Connectivity };

std::string_view to_string(Check c);

struct CheckResult {
  Check check;
  bool ok = false;
  std::string detail;
};

struct AdmissibilityReport {
  std::array<CheckResult, 4> checks;
  /// First failing check in declaration order; empty means Inconclusive.
  std::optional<Check> verdict;

  bool impossible() const { return verdict.has_value(); }
};

/// Runs the four checks, in order:
///  - ColorParity: every offset preserves checkerboard color yet the board
///    has both colors, so no walk can cover it.
///  - BipartiteBalance: every offset flips color, so a closed tour needs an
///    even cell count with equal color counts, and an open tour color counts
///    differing by at most one. Skipped on one-cell boards, where no move is
///    required at all.
///  - MinDegree: closed tours need degree >= 2 everywhere (>= 1 on two-cell
///    boards, whose only closed tour walks one edge twice; impossible on
///    one-cell boards). Open tours need degree >= 1 everywhere and at most
///    two degree-1 cells; a one-cell board trivially admits the open tour.
///  - Connectivity: breadth-first traversal from (1,1) must reach every cell.
/// All four results are always reported; the verdict is the first failure.
AdmissibilityReport necessary_conditions(const MoveGraph& graph,
                                         TourKind kind);
AdmissibilityReport necessary_conditions(BoardDims dims, const Piece& piece,
                                         TourKind kind);

std::string to_string(const AdmissibilityReport& report);

}  // namespace leapers
