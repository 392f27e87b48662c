#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobq {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        reason_(what),
        position_(position) {}

  std::size_t position() const { return position_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
  std::size_t position_;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands live in different polynomial rings") {}
};

class ExponentOverflow : public Error {
 public:
  using Error::Error;
};

/// A configured computation budget (basis size, degree, pairs, exponent
/// cap) was exceeded. Never converted into a wrong answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace frobq
