#include "leapers/verify.hpp"

#include <vector>

namespace leapers {

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::Coverage: return "Coverage";
    case Condition::Step: return "Step";
    case Condition::Closure: return "Closure";
    case Condition::Bounds: return "Bounds";
    case Condition::Length: return "Length";
    case Condition::Duplicate: return "Duplicate";
  }
  return "?";
}

VerifyReport verify_tour(const Tour& tour, const Piece& piece) {
  VerifyReport report;
  const auto& cells = tour.cells;
  const std::int64_t want = tour.dims.cell_count();
  const std::int64_t have = static_cast<std::int64_t>(cells.size());

  if (have != want) {
    report.violations.push_back(
        {Condition::Length, 0,
         "sequence has " + std::to_string(have) + " cells, board " +
             to_string(tour.dims) + " has " + std::to_string(want)});
  }

  int first_oob = 0;
  for (std::size_t t = 0; t < cells.size(); ++t) {
    if (!tour.dims.contains(cells[t])) {
      first_oob = static_cast<int>(t) + 1;
      report.violations.push_back(
          {Condition::Bounds, first_oob,
           "cell " + to_string(cells[t]) + " is outside " +
               to_string(tour.dims)});
      break;
    }
  }

  // Duplicate and coverage bookkeeping over in-bounds cells only.
  std::vector<int> seen_at(static_cast<std::size_t>(want), 0);
  for (std::size_t t = 0; t < cells.size(); ++t) {
    if (!tour.dims.contains(cells[t])) continue;
    int& slot = seen_at[static_cast<std::size_t>(tour.dims.index_of(cells[t]))];
    if (slot != 0) {
      report.violations.push_back(
          {Condition::Duplicate, static_cast<int>(t) + 1,
           "cell " + to_string(cells[t]) + " already visited at step " +
               std::to_string(slot)});
      break;
    }
    slot = static_cast<int>(t) + 1;
  }

  for (std::int64_t v = 0; v < want; ++v) {
    if (seen_at[static_cast<std::size_t>(v)] == 0) {
      report.violations.push_back(
          {Condition::Coverage, 0,
           "cell " + to_string(tour.dims.cell_at(static_cast<int>(v))) +
               " is never visited"});
      break;
    }
  }

  for (std::size_t t = 0; t + 1 < cells.size(); ++t) {
    if (!piece.attacks(cells[t], cells[t + 1])) {
      report.violations.push_back(
          {Condition::Step, static_cast<int>(t) + 1,
           to_string(cells[t]) + " does not attack " +
               to_string(cells[t + 1])});
      break;
    }
  }

  if (tour.kind == TourKind::Closed && !cells.empty() &&
      !piece.attacks(cells.back(), cells.front())) {
    report.violations.push_back(
        {Condition::Closure, static_cast<int>(cells.size()),
         "last cell " + to_string(cells.back()) + " does not attack first " +
             to_string(cells.front())});
  }

  report.valid = report.violations.empty();
  return report;
}

std::string to_string(const VerifyReport& report) {
  if (report.valid) return "valid\n";
  std::string out = "invalid\n";
  for (const auto& v : report.violations) {
    out += "  ";
    out += to_string(v.condition);
    if (v.index > 0) out += " at step " + std::to_string(v.index);
    out += ": " + v.detail + "\n";
  }
  return out;
}

}  // namespace leapers
