#pragma once

#include <stdexcept>
#include <string>

namespace qcs {

// Raised when an operation's input domain is violated. The CLI maps this to
// exit status 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A discriminant window that contains no fundamental discriminant. The CLI
// maps this to exit status 3.
class EmptyWindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the range covered by the precomputed prime sieve.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

}  // namespace qcs
