#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lamod {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in a scalar expression; position is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at " + std::to_string(position) + ": " + message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownCoordinate : public Error {
 public:
  using Error::Error;
};

class ChartMismatch : public Error {
 public:
  ChartMismatch() : Error("operands live on different charts") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A gauge or density function does not divide the terms it must divide.
class Indivisible : public Error {
 public:
  using Error::Error;
};

/// Integration requested along a non-compact (polynomial) direction.
class NonCompactError : public Error {
 public:
  using Error::Error;
};

class KindMismatch : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed structure data or spec file.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// Structure data violating an axiom (Jacobi, anchor homomorphism, ...).
class ValidationError : public Error {
 public:
  ValidationError(const std::string& identity, const std::string& residual)
      : Error(identity + " fails, residual " + residual), identity_(identity), residual_(residual) {}
  const std::string& identity() const { return identity_; }
  const std::string& residual() const { return residual_; }

 private:
  std::string identity_;
  std::string residual_;
};

class TruncationTooSmall : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree did not. Always a bug in a sign convention.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lamod
