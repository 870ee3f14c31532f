#pragma once

#include <stdexcept>
#include <string>

namespace coulomb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grid has too few samples along an axis for the requested stencil.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Two fields (or a field and a request) live on different grids.
class GridError : public Error {
 public:
  using Error::Error;
};

/// A point falls outside the sampled region of a grid.
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// Evaluation on a line source or on the flux axis.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid physical or numerical parameter.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Problem size exceeds a cost guard.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// A stored object violates one of its structural invariants.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Sampled data too coarse to resolve the requested quantity.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// A callable produced a non-finite value.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace coulomb
