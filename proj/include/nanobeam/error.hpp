#pragma once

#include <stdexcept>
#include <string>

namespace nanobeam {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Physical or numerical parameters outside their admissible range.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// The analysis is only defined for a buckled first mode (alpha < 0).
class UnsupportedRegime : public Error {
 public:
  using Error::Error;
};

/// Energy level set (dividing surface, well region) is empty or degenerate.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Rejection sampler accepted too few proposals to be trusted.
class PathologicalRegion : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Energy drift or non-finite state during propagation.
class IntegrationError : public Error {
 public:
  using Error::Error;
};

/// Fixed-point or root iteration failed to converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Every trajectory in an ensemble was censored.
class NoStatistics : public Error {
 public:
  using Error::Error;
};

}  // namespace nanobeam
