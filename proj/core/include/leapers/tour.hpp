#pragma once

#include <string_view>
#include <vector>

#include "leapers/board.hpp"

namespace leapers {

enum class TourKind { Closed, Open };

inline constexpr std::string_view to_string(TourKind k) {
  return k == TourKind::Closed ? "closed" : "open";
}

/// An ordered cell sequence claimed to visit the whole board. Construction
/// does not validate anything; verify_tour() does.
struct Tour {
  BoardDims dims;
  TourKind kind = TourKind::Closed;
  std::vector<Cell> cells;
};

}  // namespace leapers
