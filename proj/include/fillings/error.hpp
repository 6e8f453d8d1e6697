#pragma once

#include <stdexcept>
#include <string>

namespace fillings {

/// Malformed or out-of-contract input (CLI exit code 3).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation was called outside its precondition.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Integer elimination produced an entry wider than the configured bit bound.
class CoefficientOverflow : public std::runtime_error {
 public:
  explicit CoefficientOverflow(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fillings
