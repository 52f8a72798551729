#pragma once

#include <stdexcept>
#include <string>

namespace keyrate {

// Invalid argument or violated invariant. The CLI maps this to exit code 1.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request whose size exceeds a configured cap (joint table entries, sweep
// evaluations).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File could not be read or written. The CLI maps this to exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace keyrate
