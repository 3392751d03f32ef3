#pragma once

#include <stdexcept>
#include <string>

namespace dsturm {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments, malformed tables, violated preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search would exceed its configured budget.
class BudgetError : public InputError {
 public:
  using InputError::InputError;
};

/// A computed quantity missed its stated tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A hypothesis required by an operation was checked and found false
/// (for example a Krein check that produced a negative coefficient).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace dsturm
