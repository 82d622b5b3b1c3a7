#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace leapers {

/// 1-indexed board coordinate, row 1 at the top. Ordering is row-major.
struct Cell {
  int row = 0;
  int col = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

/// Rectangular board extent (m rows by n cols, both >= 1).
struct BoardDims {
  int rows = 0;
  int cols = 0;

  BoardDims(int m, int n) : rows(m), cols(n) {
    if (m < 1 || n < 1) {
      throw std::invalid_argument("board dimensions must be positive, got " +
                                  std::to_string(m) + "x" + std::to_string(n));
    }
  }

  std::int64_t cell_count() const {
    return static_cast<std::int64_t>(rows) * cols;
  }

  bool contains(Cell c) const {
    return c.row >= 1 && c.row <= rows && c.col >= 1 && c.col <= cols;
  }

  /// Row-major cell index in [0, rows*cols). Caller guarantees contains(c).
  int index_of(Cell c) const { return (c.row - 1) * cols + (c.col - 1); }

  Cell cell_at(int index) const {
    return Cell{index / cols + 1, index % cols + 1};
  }

  friend bool operator==(const BoardDims&, const BoardDims&) = default;
};

inline std::string to_string(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

inline std::string to_string(const BoardDims& d) {
  return std::to_string(d.rows) + "x" + std::to_string(d.cols);
}

}  // namespace leapers
