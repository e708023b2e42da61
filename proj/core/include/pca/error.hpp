#pragma once

#include <stdexcept>
#include <string>

namespace pca {

// Base of every error raised by the library. The CLI maps subclasses onto
// exit codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Out-of-range model parameter, size, or particle count.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Configuration alphabet does not match what the operation or model expects.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

// A successor left the state space handed to build_matrix.
class ClosureError : public Error {
 public:
  using Error::Error;
};

// Chain has no unique aperiodic recurrent class.
class ErgodicityError : public Error {
 public:
  ErgodicityError(const std::string& what, int closed_classes)
      : Error(what), closed_classes_(closed_classes) {}
  int closed_classes() const noexcept { return closed_classes_; }

 private:
  int closed_classes_;
};

// Rotation quotient is not a valid lumping (implementation bug if raised).
class LumpabilityError : public Error {
 public:
  using Error::Error;
};

// Too many movable particles to enumerate all hop subsets.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace pca
