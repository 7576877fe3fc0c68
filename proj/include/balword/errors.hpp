#pragma once

#include <stdexcept>
#include <string>

namespace balword {

/// Precondition or domain violation (bad slope, digit out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Arithmetic between two different quadratic fields where one is required.
class FieldMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The paint sequence ran out before every b was coloured.
class InsufficientPaint : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Operation is defined only for irrational slopes (aperiodic sequences).
class UnsupportedRational : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed textual input.
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace balword
