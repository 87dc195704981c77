#pragma once

#include <stdexcept>
#include <string>

namespace biq {

/// Raised when input data or parameters violate an operation's preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace biq
