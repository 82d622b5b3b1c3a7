#pragma once

#include <stdexcept>
#include <string>

namespace leapers {

/// Raised by grid/table readers. Positions are 1-based; 0 means "not tied to
/// a specific position" (e.g. a value missing from the whole grid).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error(format(line, column, message)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(int line, int column, const std::string& message) {
    if (line <= 0) return message;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + message;
  }

  int line_;
  int column_;
};

/// Raised when an input exceeds a hard size cap (oracle vertex limit,
/// board index overflow).
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace leapers
