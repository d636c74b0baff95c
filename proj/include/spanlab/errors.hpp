#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spanlab {

/// Malformed input text. Carries the 1-based line and the byte offset
/// within that line where parsing stopped.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t offset)
      : std::runtime_error("line " + std::to_string(line) + ", offset " +
                           std::to_string(offset) + ": " + what),
        line_(line),
        offset_(offset) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t line_;
  std::size_t offset_;
};

/// Structurally invalid graph data (loops, duplicate edges, bad vertex ids,
/// unknown labels, precondition violations on graph arguments).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive search was asked to run beyond its configured size cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spanlab
