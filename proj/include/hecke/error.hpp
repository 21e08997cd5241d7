#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldError : public Error {
 public:
  using Error::Error;
};

/// Size, context or ring-membership mismatch in polynomial/matrix code.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside the documented range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Input to a double-coset reduction is not in GL_n(F_q[t, 1/t]).
class ReductionError : public Error {
 public:
  using Error::Error;
};

/// A computed result failed its own certificate (witness, oracle, held-out fit).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace hecke
