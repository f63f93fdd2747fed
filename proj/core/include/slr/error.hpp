#pragma once

#include <stdexcept>
#include <string>

namespace slr {

// An input does not satisfy the stated precondition of an operation. The
// message names the violated lemma or rule.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive search exceeded its work budget.
class OracleBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A produced object failed its own re-verification. Never expected.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A certificate handed to a verifier does not check out.
class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace slr
