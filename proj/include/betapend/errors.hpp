#pragma once

#include <stdexcept>
#include <string>

namespace betapend {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside a family's open domain (e.g. x <= 1 for the
// multiplicative family).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Wrong number of arguments for a family, or arity above the supported
// ceiling.
class ArityError : public Error {
 public:
  using Error::Error;
};

// Non-finite input, or an integrand that returned a non-finite value.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Gauss rule order outside [2, 64].
class InvalidOrder : public Error {
 public:
  using Error::Error;
};

// Cubature dimension above the supported ceiling.
class DimensionTooLarge : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature exhausted its subdivision budget before reaching
// the requested tolerance.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

// Least-squares problem with too few admissible residual terms.
class DegenerateProblem : public Error {
 public:
  using Error::Error;
};

}  // namespace betapend
