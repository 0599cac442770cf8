#pragma once

#include <stdexcept>
#include <string>

namespace sbi {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (x <= 0, |u| > 1,
/// zero frequency, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The argument sits on a branch cut of a multivalued function.
class BranchCutError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A result or intermediate quantity is not representable in double.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A definite integral does not converge for the requested parameters.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// A term of a closed form cannot be evaluated (e.g. a zero scale where the
/// formula divides by it).
class SingularError : public Error {
 public:
  using Error::Error;
};

/// The requested parameter combination is valid mathematically but not
/// handled by this code path.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// An iterative algorithm (series, continued fraction) failed to converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace sbi
