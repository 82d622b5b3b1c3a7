#include "leapers/admissibility.hpp"

#include <algorithm>
#include <vector>

namespace leapers {

namespace {

CheckResult color_parity(const MoveGraph& g) {
  const auto& offsets = g.piece().offsets();
  const bool all_preserve =
      std::all_of(offsets.begin(), offsets.end(),
                  [](Offset o) { return (o.dr + o.dc) % 2 == 0; });
  const bool both_colors = g.dims().cell_count() >= 2;
  if (all_preserve && both_colors) {
    return {Check::ColorParity, false,
            "every move preserves checkerboard color, so one color class is "
            "unreachable"};
  }
  return {Check::ColorParity, true,
          all_preserve ? "single-color board" : "some move changes color"};
}

CheckResult bipartite_balance(const MoveGraph& g, TourKind kind) {
  const auto& d = g.dims();
  const std::int64_t total = d.cell_count();
  if (total < 2) {
    return {Check::BipartiteBalance, true, "single cell, no move required"};
  }
  const auto& offsets = g.piece().offsets();
  const bool all_flip =
      std::all_of(offsets.begin(), offsets.end(),
                  [](Offset o) { return (o.dr + o.dc) % 2 != 0; });
  if (!all_flip) {
    return {Check::BipartiteBalance, true, "moves are not all color-flipping"};
  }
  // Color 0 is the color of (1,1).
  const std::int64_t color0 =
      static_cast<std::int64_t>((d.rows + 1) / 2) * ((d.cols + 1) / 2) +
      static_cast<std::int64_t>(d.rows / 2) * (d.cols / 2);
  const std::int64_t color1 = total - color0;
  const std::string counts = std::to_string(color0) + " vs " +
                             std::to_string(color1) + " cells per color";
  if (kind == TourKind::Closed) {
    if (total % 2 != 0 || color0 != color1) {
      return {Check::BipartiteBalance, false,
              "closed tours must alternate colors evenly, but the board has " +
                  counts};
    }
  } else if (std::abs(color0 - color1) > 1) {
    return {Check::BipartiteBalance, false,
            "open tours allow color counts to differ by at most 1, but the "
            "board has " +
                counts};
  }
  return {Check::BipartiteBalance, true, counts};
}

CheckResult min_degree(const MoveGraph& g, TourKind kind) {
  const int n = g.vertex_count();
  if (kind == TourKind::Closed) {
    if (n == 1) {
      return {Check::MinDegree, false,
              "a closed tour on a single cell would need a self-attack"};
    }
    // A two-cell closed tour walks its one edge out and back, so degree 1
    // suffices there; every longer cycle needs two distinct neighbors.
    const int need = n == 2 ? 1 : 2;
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) < need) {
        return {Check::MinDegree, false,
                "cell " + to_string(g.cell_of(v)) + " has degree " +
                    std::to_string(g.degree(v)) + ", closed tours need " +
                    std::to_string(need)};
      }
    }
    return {Check::MinDegree, true, "every cell has degree >= " +
                                        std::to_string(need)};
  }

  if (n == 1) {
    return {Check::MinDegree, true, "single cell, trivially tourable"};
  }
  int degree_one = 0;
  Cell third{};
  for (int v = 0; v < n; ++v) {
    const int deg = g.degree(v);
    if (deg == 0) {
      return {Check::MinDegree, false,
              "cell " + to_string(g.cell_of(v)) + " has no moves"};
    }
    if (deg == 1 && ++degree_one == 3) third = g.cell_of(v);
  }
  if (degree_one > 2) {
    return {Check::MinDegree, false,
            std::to_string(degree_one) +
                " cells of degree 1 (e.g. " + to_string(third) +
                "), but a path has only two endpoints"};
  }
  return {Check::MinDegree, true,
          std::to_string(degree_one) + " cells of degree 1"};
}

CheckResult connectivity(const MoveGraph& g) {
  const int n = g.vertex_count();
  std::vector<char> reached(static_cast<std::size_t>(n), 0);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n));
  queue.push_back(0);
  reached[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const int w : g.neighbors(queue[head])) {
      if (!reached[static_cast<std::size_t>(w)]) {
        reached[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  if (queue.size() == static_cast<std::size_t>(n)) {
    return {Check::Connectivity, true, "move graph is connected"};
  }
  const auto missing = std::find(reached.begin(), reached.end(), 0);
  const int v = static_cast<int>(missing - reached.begin());
  return {Check::Connectivity, false,
          "cell " + to_string(g.cell_of(v)) + " is unreachable from (1,1) (" +
              std::to_string(queue.size()) + " of " + std::to_string(n) +
              " cells reached)"};
}

}  // namespace

std::string_view to_string(Check c) {
  switch (c) {
    case Check::ColorParity: return "ColorParity";
    case Check::BipartiteBalance: return "BipartiteBalance";
    case Check::MinDegree: return "MinDegree";
    case Check::Connectivity: return "Connectivity";
  }
  return "?";
}

AdmissibilityReport necessary_conditions(const MoveGraph& graph,
                                         TourKind kind) {
  AdmissibilityReport report{
      {color_parity(graph), bipartite_balance(graph, kind),
       min_degree(graph, kind), connectivity(graph)},
      std::nullopt};
  for (const auto& check : report.checks) {
    if (!check.ok) {
      report.verdict = check.check;
      break;
    }
  }
  return report;
}

AdmissibilityReport necessary_conditions(BoardDims dims, const Piece& piece,
                                         TourKind kind) {
  return necessary_conditions(MoveGraph(dims, piece), kind);
}

std::string to_string(const AdmissibilityReport& report) {
  std::string out;
  for (const auto& check : report.checks) {
    out += std::string(to_string(check.check)) + ": " +
           (check.ok ? "pass" : "fail") + " (" + check.detail + ")\n";
  }
  out += "verdict: ";
  if (report.verdict) {
    out += "Impossible(" + std::string(to_string(*report.verdict)) + ")\n";
  } else {
    out += "Inconclusive\n";
  }
  return out;
}

}  // namespace leapers
