#pragma once

#include <stdexcept>
#include <string>

namespace polysym {

/// Argument outside the mathematical domain of an operation (t(1), h(λ) > m, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operands live in incompatible variable spaces.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size bound was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed; always indicates a bug upstream.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A weight table that is not the character of a polynomial GL_m-module.
class NotPolynomialCharacter : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

/// Malformed bracket / t-variable notation.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace polysym
