#pragma once

#include <stdexcept>
#include <string>

namespace liepair {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Raised when an algebra or pair table fails validation.
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class NotASubalgebra : public Error {
 public:
  using Error::Error;
};

class NotADerivation : public Error {
 public:
  using Error::Error;
};

class NotMaurerCartan : public Error {
 public:
  using Error::Error;
};

class NotSmall : public Error {
 public:
  using Error::Error;
};

/// A result that theory guarantees failed its exact re-check. Always a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace liepair
