#include "leapers/grid_io.hpp"

#include <cctype>
#include <istream>
#include <sstream>
#include <vector>

namespace leapers {

namespace {

struct Token {
  long long value;
  int line;    // 1-based, counting skipped lines
  int column;  // 1-based character position of the first digit
};

bool skippable(const std::string& line) {
  for (const char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;  // blank
}

std::vector<Token> tokenize_row(const std::string& line, int line_no) {
  std::vector<Token> row;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const int col = static_cast<int>(i) + 1;
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j]))) {
      ++j;
    }
    const std::string tok = line.substr(i, j - i);
    long long value = 0;
    for (const char ch : tok) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw ParseError(line_no, col,
                         "expected a positive integer, got '" + tok + "'");
      }
      value = value * 10 + (ch - '0');
      if (value > 1'000'000'000LL) {
        throw ParseError(line_no, col, "value '" + tok + "' is out of range");
      }
    }
    if (value == 0) {
      throw ParseError(line_no, col, "grid values start at 1, got '" + tok +
                                         "'");
    }
    row.push_back({value, line_no, col});
    i = j;
  }
  return row;
}

}  // namespace

Tour parse_grid(std::istream& in, TourKind kind,
                std::optional<BoardDims> expected) {
  std::vector<std::vector<Token>> rows;
  std::string line;
  int line_no = 0;
  int first_row_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto row = tokenize_row(line, line_no);
    if (rows.empty()) {
      first_row_line = line_no;
    } else if (row.size() != rows.front().size()) {
      throw ParseError(line_no, static_cast<int>(line.size()) + 1,
                       "ragged row: " + std::to_string(row.size()) +
                           " values, expected " +
                           std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(line_no, 1, "no grid rows found");

  const int m = static_cast<int>(rows.size());
  const int n = static_cast<int>(rows.front().size());
  const BoardDims dims(m, n);
  if (expected && !(dims == *expected)) {
    throw ParseError(first_row_line, 1,
                     "grid is " + to_string(dims) + ", expected " +
                         to_string(*expected));
  }

  const std::int64_t total = dims.cell_count();
  std::vector<const Token*> position_of(static_cast<std::size_t>(total),
                                        nullptr);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const Token& tok = rows[static_cast<std::size_t>(i)]
                             [static_cast<std::size_t>(j)];
      if (tok.value > total) {
        throw ParseError(tok.line, tok.column,
                         "value " + std::to_string(tok.value) +
                             " exceeds cell count " + std::to_string(total));
      }
      const Token*& slot = position_of[static_cast<std::size_t>(tok.value - 1)];
      if (slot != nullptr) {
        throw ParseError(tok.line, tok.column,
                         "value " + std::to_string(tok.value) +
                             " appears more than once (first at line " +
                             std::to_string(slot->line) + ", column " +
                             std::to_string(slot->column) + ")");
      }
      slot = &tok;
    }
  }
  // m*n in-range values with no repeats form a permutation, so reaching
  // here means every value 1..m*n is present.

  Tour tour{dims, kind, {}};
  tour.cells.resize(static_cast<std::size_t>(total));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const Token& tok = rows[static_cast<std::size_t>(i)]
                             [static_cast<std::size_t>(j)];
      tour.cells[static_cast<std::size_t>(tok.value - 1)] =
          Cell{i + 1, j + 1};
    }
  }
  return tour;
}

Tour parse_grid(std::string_view text, TourKind kind,
                std::optional<BoardDims> expected) {
  std::istringstream in{std::string(text)};
  return parse_grid(in, kind, expected);
}

std::string render_grid(const Tour& tour) {
  const std::int64_t total = tour.dims.cell_count();
  if (static_cast<std::int64_t>(tour.cells.size()) != total) {
    throw std::invalid_argument(
        "cannot render an incomplete tour: " +
        std::to_string(tour.cells.size()) + " cells on a " +
        to_string(tour.dims) + " board");
  }
  std::vector<std::int64_t> value_at(static_cast<std::size_t>(total), 0);
  for (std::size_t t = 0; t < tour.cells.size(); ++t) {
    const Cell c = tour.cells[t];
    if (!tour.dims.contains(c)) {
      throw std::invalid_argument("cannot render tour: cell " + to_string(c) +
                                  " is outside " + to_string(tour.dims));
    }
    std::int64_t& slot = value_at[static_cast<std::size_t>(
        tour.dims.index_of(c))];
    if (slot != 0) {
      throw std::invalid_argument("cannot render tour: cell " + to_string(c) +
                                  " is visited twice");
    }
    slot = static_cast<std::int64_t>(t) + 1;
  }

  std::string out;
  for (int i = 0; i < tour.dims.rows; ++i) {
    for (int j = 0; j < tour.dims.cols; ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(
          value_at[static_cast<std::size_t>(i * tour.dims.cols + j)]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace leapers
