#pragma once

#include <stdexcept>
#include <string>

namespace dcyc {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied value violates a documented precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

// A step that the underlying theory guarantees has failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Exhaustive cycle search found nothing of the requested length.
class NoCycleError : public Error {
 public:
  using Error::Error;
};

// Cycle search hit its node-expansion budget before deciding.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace dcyc
