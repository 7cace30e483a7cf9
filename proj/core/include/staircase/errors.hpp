#pragma once

#include <stdexcept>

namespace staircase {

// Raised when an evaluation schedule would exceed the configured term limit.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace staircase
