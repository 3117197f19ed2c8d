#pragma once

#include <stdexcept>
#include <string>

namespace gzero {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of incompatible kinds (rational vs quaternion, row vs column).
class TypeError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

/// The universe, filter or operation is outside the representable fragment.
class UnsupportedUniverse : public Error {
 public:
  using Error::Error;
};

/// A pairing <f,h> whose support interaction is infinite. `witness` is the
/// serialized infinite set supp(f) ∩ supp(h)*.
class UndefinedPairing : public Error {
 public:
  UndefinedPairing(const std::string& msg, std::string witness)
      : Error(msg), witness(std::move(witness)) {}
  std::string witness;
};

/// A matrix product with an entry that is an infinite sum.
class UndefinedProduct : public Error {
 public:
  UndefinedProduct(const std::string& msg, std::string witness)
      : Error(msg), witness(std::move(witness)) {}
  std::string witness;
};

class NotSummable : public Error {
 public:
  NotSummable(const std::string& msg, std::string witness)
      : Error(msg), witness(std::move(witness)) {}
  std::string witness;
};

/// The exact result exists but leaves the finite-plus-periodic fragment.
class UnrepresentableResult : public Error {
 public:
  using Error::Error;
};

class InvalidNeighborhood : public Error {
 public:
  using Error::Error;
};

/// Continuity was requested for filters without a balancedness certificate.
class NonBalanced : public Error {
 public:
  using Error::Error;
};

/// A side-pattern or precondition violation on operator arguments.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace gzero
