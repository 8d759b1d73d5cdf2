#pragma once

#include <stdexcept>
#include <string>

namespace ncsf {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input (bad composition, size mismatch, wrong side, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed the desk-scale limits of the exact kernels.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A substitution map does not cover a variable occurring in the input.
class MissingBinding : public Error {
 public:
  using Error::Error;
};

/// Division by an identically zero polynomial or rational function.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A specialization made a denominator vanish.
class SingularSpecialization : public Error {
 public:
  using Error::Error;
};

}  // namespace ncsf
