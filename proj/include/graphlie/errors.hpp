#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphlie {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph violates one of the LabeledDigraph invariants.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Malformed .lg input. `line()` is 1-based; 0 means "no particular line".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& detail)
      : Error(line == 0 ? detail : "line " + std::to_string(line) + ": " + detail), line_(line), detail_(detail) {}

  /// Same error, reported as "path:line: detail".
  static ParseError in_file(const std::string& path, const ParseError& e) {
    return ParseError(path + (e.line_ ? ":" + std::to_string(e.line_) : std::string()) + ": " + e.detail_, e.line_,
                      e.detail_);
  }

  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ParseError(const std::string& what, std::size_t line, const std::string& detail)
      : Error(what), line_(line), detail_(detail) {}

  std::size_t line_;
  std::string detail_;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Operand sizes do not match the algebra or map they are used with.
class DimensionError : public Error {
 public:
  using Error::Error;
};

}  // namespace graphlie
