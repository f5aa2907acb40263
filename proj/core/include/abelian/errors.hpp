#pragma once

#include <stdexcept>
#include <string>

namespace abelian {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on user-supplied data failed (bad shape, non-closed set, zero code, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An explicit enumeration budget was exhausted before the computation finished.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check failed. Indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace abelian
