#pragma once

#include <stdexcept>
#include <string>

namespace edmf {

// Root of every exception raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text, JSON, or ring declarations.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An object was rejected because it violates a structural identity
// (e.g. uv != W*I, a morphism that is not a cocycle).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (non-divisor, zero argument,
// index out of range, W mismatch).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Elements or matrices from different ring instances were combined.
class MixedRingError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DivisionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace edmf
