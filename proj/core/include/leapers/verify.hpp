#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "leapers/piece.hpp"
#include "leapers/tour.hpp"

namespace leapers {

enum class Condition { Coverage, Step, Closure, Bounds, Length, Duplicate };

std::string_view to_string(Condition c);

struct Violation {
  Condition condition;
  /// 1-based sequence position of the first offense; 0 when the condition
  /// is not tied to one position (Length, Coverage).
  int index = 0;
  std::string detail;
};

struct VerifyReport {
  bool valid = false;
  std::vector<Violation> violations;  // at most one entry per condition
};

/// Checks a tour against the tour definition: the cells are exactly all
/// board cells with no repeats, consecutive cells attack each other, and for
/// closed tours the last cell attacks the first. Each violated condition is
/// reported once with the first offending index; nothing short-circuits, so
/// callers can assert which specific condition a mutation broke.
///
/// A closed two-cell tour that walks its single edge in both directions is
/// accepted: the definition does not forbid traversing an edge twice.
VerifyReport verify_tour(const Tour& tour, const Piece& piece);

std::string to_string(const VerifyReport& report);

}  // namespace leapers
