#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace closeness {

using VertexId = std::uint32_t;

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameter outside its documented domain (epsilon <= 0, k == 0, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed edge-list input. line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// The graph violates a structural precondition (too small, over a size cap).
class GraphPrecondition : public Error {
 public:
  using Error::Error;
};

// Some distance is infinite. witness() is a vertex that cannot be reached.
class DisconnectedGraph : public GraphPrecondition {
 public:
  explicit DisconnectedGraph(VertexId witness)
      : GraphPrecondition("graph is not connected: vertex " +
                          std::to_string(witness) + " is unreachable"),
        witness_(witness) {}

  VertexId witness() const noexcept { return witness_; }

 private:
  VertexId witness_;
};

}  // namespace closeness
