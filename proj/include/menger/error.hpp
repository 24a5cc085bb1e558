#pragma once

#include <stdexcept>
#include <string>

namespace menger {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An oracle or search refused to run because an input exceeds a size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// A certified invariant failed at runtime. Never expected on valid input.
class InternalInvariantError : public Error {
 public:
  using Error::Error;
};

/// An edge set handed to the greedy path decomposition does not split into
/// the requested number of s->t paths.
class MalformedAugmentation : public Error {
 public:
  using Error::Error;
};

/// A wave assumed maximal admitted no path to the sink.
class NonMaximalWave : public Error {
 public:
  using Error::Error;
};

}  // namespace menger
