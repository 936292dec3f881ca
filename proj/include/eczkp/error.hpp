#pragma once

#include <stdexcept>
#include <string>

namespace eczkp {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad argument to an operation: mismatched moduli, mixed curves, n < 2, ...
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Modular inverse of zero / division by zero.
class DivisionByZeroError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

// Curve parameter validation failures, one type per failure mode.
class ValidationError : public Error {
 public:
  using Error::Error;
};
class SingularCurveError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class OffCurveGeneratorError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class WrongOrderError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class NotPrimeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Brute-force discrete-log helper refusals.
class EcdlpThresholdError : public Error {
 public:
  using Error::Error;
};
class EcdlpNotFoundError : public Error {
 public:
  using Error::Error;
};

// Protocol session driven out of order by the caller.
class StateError : public Error {
 public:
  using Error::Error;
};

// Every unordered pair of the compromise pool has been consumed.
class PoolExhaustedError : public Error {
 public:
  using Error::Error;
};

// Wire decode failures, one type per failure mode.
class DecodeError : public Error {
 public:
  using Error::Error;
};
class TruncatedMessageError : public DecodeError {
 public:
  using DecodeError::DecodeError;
};
class BadTagError : public DecodeError {
 public:
  using DecodeError::DecodeError;
};
class OffCurvePointError : public DecodeError {
 public:
  using DecodeError::DecodeError;
};
class ValueRangeError : public DecodeError {
 public:
  using DecodeError::DecodeError;
};

// Identity file problems (syntax, unknown keys, inconsistent key material).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Socket / stream failures.
class TransportError : public Error {
 public:
  using Error::Error;
};

}  // namespace eczkp
