#pragma once

#include <stdexcept>
#include <string>

namespace mamab {

/// Precondition violated by a caller-supplied argument.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative numerical routine failed to converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generated object could not satisfy its invariants (e.g. a random graph
/// that stays disconnected after the retry budget).
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested a quantity that has no defined value yet.
class NotEstimableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace mamab
