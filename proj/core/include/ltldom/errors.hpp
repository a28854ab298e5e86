#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ltldom {

/// Syntax error in a formula, lasso word, acceptance condition, or mapping
/// file. Coordinates are 1-based; column points at the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(message + " (at " + std::to_string(line) + ":" +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ltldom
