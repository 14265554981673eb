#pragma once

#include <stdexcept>
#include <string>

namespace quadpow {

// Bad arguments from a caller (CLI flag, out-of-range index, malformed text).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An engine refused its input because a mathematical precondition failed
// (e.g. the quotient would not be Artinian).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace quadpow
