#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adlv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input from the caller: unparsable text, unknown datum, violated precondition.
class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public UsageError {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : UsageError(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

class DatumError : public UsageError {
 public:
  using UsageError::UsageError;
};

class ContractError : public UsageError {
 public:
  using UsageError::UsageError;
};

class NotComparable : public ContractError {
 public:
  using ContractError::ContractError;
};

class NoExtremum : public ContractError {
 public:
  using ContractError::ContractError;
};

class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what_cap, std::size_t cap)
      : Error(what_cap + " exceeded cap of " + std::to_string(cap)), limit(cap) {}
  std::size_t limit;
};

// A mathematical identity that must hold failed. Always a bug or a wrong convention.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class IntegralityError : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

}  // namespace adlv
