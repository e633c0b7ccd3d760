#pragma once

#include <stdexcept>
#include <string>

namespace jaco {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  virtual const char *kind() const noexcept { return "Error"; }
};

// Bad argument: index out of range, self-loop, zero order, wrong rule.
class InvalidArgument : public Error {
public:
  using Error::Error;
  const char *kind() const noexcept override { return "InvalidArgument"; }
};

// Index computation requested on a graph that is not connected.
class DisconnectedGraph : public Error {
public:
  using Error::Error;
  const char *kind() const noexcept override { return "DisconnectedGraph"; }
};

// A structural hypothesis of the exact recursion does not hold.
class StructureAssumptionViolated : public Error {
public:
  using Error::Error;
  const char *kind() const noexcept override {
    return "StructureAssumptionViolated";
  }
};

// Exact integer arithmetic left the representable range.
class Overflow : public Error {
public:
  using Error::Error;
  const char *kind() const noexcept override { return "Overflow"; }
};

} // namespace jaco
