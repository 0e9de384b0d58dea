#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace normality {

// Base for every error raised on malformed graphs or invalid graph operations.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DisconnectedGraph : public GraphError {
 public:
  DisconnectedGraph() : GraphError("graph is not connected") {}
};

class NotATree : public GraphError {
 public:
  NotATree() : GraphError("graph is not a tree") {}
};

// Parameters outside a construction's or formula's domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace normality
