#pragma once

#include <stdexcept>
#include <string>

namespace bicolor {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in rings (or groups) of different dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An index argument is outside its admissible range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (cycle notation, polynomial text, JSON fields).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A value violates a documented invariant (bad partition, bad state, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A state does not satisfy the local admissibility rules.
class AdmissibilityError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

/// Operation requires a system of a particular classification category.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

/// A Gelfand-Tsetlin pattern cannot be turned into a unique state.
class InvalidPatternError : public Error {
 public:
  using Error::Error;
};

}  // namespace bicolor
