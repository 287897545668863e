#pragma once

#include <stdexcept>
#include <string>

namespace tfag {

// Base of every error raised by the library. The CLI maps the subclasses
// onto exit codes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

class DimensionError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "dimension"; }
};

class ArgumentError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "argument"; }
};

// Mathematically meaningful refusal: not a p-adic integer, not a member, ...
class DomainError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

// The answer cannot be decided at the requested precision or bound.
class PrecisionError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "precision"; }
};

// A guaranteed property failed to hold. Always a bug.
class InvariantError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "invariant"; }
};

} // namespace tfag
