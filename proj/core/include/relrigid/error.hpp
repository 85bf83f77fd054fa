#pragma once

#include <stdexcept>
#include <string>

namespace relrigid {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or a violated precondition of a public operation.
class InputError : public Error {
 public:
  using Error::Error;
};

// An internal cross-check disagreed; this indicates a bug, not bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Raised by operations that only make sense in characteristic zero.
class FieldError : public Error {
 public:
  using Error::Error;
};

}  // namespace relrigid
