#pragma once

#include <stdexcept>
#include <string>

namespace ladder {

/// Base class for every error raised by the library.
class LadderError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Shape or index mismatch between operands.
class DimensionError : public LadderError {
  public:
    using LadderError::LadderError;
};

/// An iterative kernel did not converge.
class ConvergenceError : public LadderError {
  public:
    using LadderError::LadderError;
};

/// Thermodynamic-limit quantity requested while the top transfer eigenvalue is degenerate
/// (the g = 0 transition point for the built-in families).
class DegenerateTopError : public LadderError {
  public:
    using LadderError::LadderError;
};

/// The MPS has vanishing or negative norm.
class DegenerateStateError : public LadderError {
  public:
    using LadderError::LadderError;
};

/// A parameter is outside its admissible domain.
class ParameterError : public LadderError {
  public:
    using LadderError::LadderError;
};

/// A Hamiltonian basis or Pauli structure check failed.
class StructureError : public LadderError {
  public:
    using LadderError::LadderError;
};

} // namespace ladder
