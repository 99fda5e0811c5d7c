#pragma once

#include <stdexcept>
#include <string>

namespace cgas {

/// Base of every library failure. The CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (r <= 0, disc vs annulus, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The potential violates subharmonicity, growth or support requirements.
class InvalidPotential : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedOrder : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Adaptive quadrature failed to reach its tolerance.
class IntegrationError : public Error {
 public:
  using Error::Error;
};

/// Root bracketing or bisection failed.
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace cgas
