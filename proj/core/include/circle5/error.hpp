#pragma once

#include <stdexcept>
#include <string>

namespace circle5 {

// Raised when caller-supplied data violates a documented precondition or
// type invariant. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace circle5
