#pragma once

#include <stdexcept>
#include <string>

namespace symrees {

/// Base class of every error raised by the library.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatchError : public AlgebraError {
 public:
  RingMismatchError() : AlgebraError("operands live in different polynomial rings") {}
  using AlgebraError::AlgebraError;
};

class NotDivisibleError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class NotHomogeneousError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class DomainError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Raised when a cooperative deadline expires inside a long computation.
class DeadlineExceeded : public AlgebraError {
 public:
  DeadlineExceeded() : AlgebraError("deadline exceeded") {}
};

}  // namespace symrees
