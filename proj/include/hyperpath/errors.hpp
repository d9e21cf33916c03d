#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperpath {

// Root of everything the library throws on bad input or broken invariants.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally invalid hypergraph, query or grammar.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed text input; what() carries "<source>:<line>: message".
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An algorithm was called outside its contract (negative costs, beam < 0, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The target cannot be reached from the sources, or a pruning emptied the language.
class UnreachableError : public Error {
 public:
  using Error::Error;
};

// Should never happen; signals a bug in this library.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperpath
