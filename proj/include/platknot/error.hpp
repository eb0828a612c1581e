#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace platknot {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed polynomial, word or continued-fraction text. `offset` is the
// 0-based byte position where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("syntax error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// The plat closure has more than one component where a knot is required.
class NotAKnotError : public Error {
 public:
  using Error::Error;
};

class UnknownKnotError : public Error {
 public:
  using Error::Error;
};

// The bracket state sum was asked for more crossings than it enumerates.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// Structural precondition violated (bad index, length mismatch, ...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace platknot
