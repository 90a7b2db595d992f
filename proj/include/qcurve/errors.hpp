#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcurve {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input violates a construction invariant (norm, Hermiticity, word length...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// The initial state is an eigenstate of H: speed is zero, so arc length and
/// every quantity normalized by it is undefined.
class StationaryStateError : public Error {
 public:
  StationaryStateError()
      : Error("stationary state: arc length undefined") {}
  explicit StationaryStateError(const std::string& what) : Error(what) {}
};

/// Gram-Schmidt met a vector whose residual fell below the independence
/// threshold.
class DependenceError : public Error {
 public:
  DependenceError(std::size_t index, double residual)
      : Error("vector " + std::to_string(index) +
              " is linearly dependent on its predecessors (residual norm " +
              std::to_string(residual) + ")"),
        index_(index),
        residual_(residual) {}

  std::size_t index() const noexcept { return index_; }
  double residual() const noexcept { return residual_; }

 private:
  std::size_t index_;
  double residual_;
};

/// A closed-form evaluator or oracle hit a singular configuration.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcurve
