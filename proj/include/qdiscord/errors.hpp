#pragma once

#include <stdexcept>
#include <string>

namespace qd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is not a valid quantum state (non-hermitian, wrong trace, negative
/// beyond tolerance, or wrong dimension for the operation).
class InvalidState : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Model or chain specification outside what a solver supports.
class UnsupportedSpec : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Two independent evaluation routes disagree beyond tolerance.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace qd
