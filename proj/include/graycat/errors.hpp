#pragma once

#include <stdexcept>
#include <string>

namespace graycat {

// Raised when a composite of morphisms does not typecheck.
class TypeError : public std::runtime_error {
public:
  explicit TypeError(const std::string& what) : std::runtime_error(what) {}
};

// Raised by parsers, with a position attached to the message.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, int col, const std::string& what)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + what),
        line(line), col(col) {}
  int line;
  int col;
};

} // namespace graycat
