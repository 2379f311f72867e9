#pragma once

#include <stdexcept>
#include <string>

namespace oddear {

// Input text could not be parsed (graph / matroid / certificate files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called on an input outside its contract.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive routine refused to run because the input exceeds its bound.
class ScaleBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oddear
