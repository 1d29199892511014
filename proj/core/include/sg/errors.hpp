#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed game, coalition or player index.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Input file or string could not be parsed. Line and column are 1-based;
// zero means "not applicable".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(format(line, column, what)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(std::size_t line, std::size_t column,
                            const std::string& what) {
    if (line == 0) return what;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }
  std::size_t line_;
  std::size_t column_;
};

// A size or search cap was exceeded; the answer is unknown rather than false.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed (a bug, not bad input).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sg
