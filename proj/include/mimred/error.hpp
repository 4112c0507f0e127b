#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mimred {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that violates a structural invariant or a precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search hit its node or size cap. Never means "no solution".
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace mimred
