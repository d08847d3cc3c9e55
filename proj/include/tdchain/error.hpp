#pragma once

#include <stdexcept>
#include <string>

namespace tdchain {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text or simplex lists that cannot be interpreted.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// Chains of incompatible or unsupported dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A tree decomposition that violates one of the decomposition axioms.
class InvalidDecomposition : public Error {
 public:
  using Error::Error;
};

/// Refusal to run an enumeration or dynamic program that exceeds its budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace tdchain
