#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "leapers/errors.hpp"
#include "leapers/tour.hpp"

namespace leapers {

/// Reads a numbered-grid tour: one line per board row, whitespace-separated
/// positive integers, where the entry t in cell (i,j) means the tour visits
/// (i,j) at step t. Lines starting with '#' and blank lines are ignored.
/// The values must be a permutation of 1..rows*cols and all rows must have
/// the same length. Throws ParseError (with 1-based line/column) on ragged
/// rows, non-integer tokens, out-of-range or repeated values, or a mismatch
/// with `expected` dims.
Tour parse_grid(std::string_view text, TourKind kind,
                std::optional<BoardDims> expected = std::nullopt);
Tour parse_grid(std::istream& in, TourKind kind,
                std::optional<BoardDims> expected = std::nullopt);

/// Canonical inverse of parse_grid: rows*cols values, single-space
/// separated, one trailing newline per row. Requires a complete tour (every
/// board cell exactly once); throws std::invalid_argument otherwise.
std::string render_grid(const Tour& tour);

}  // namespace leapers
