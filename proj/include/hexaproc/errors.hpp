#ifndef HEXAPROC_ERRORS_HPP
#define HEXAPROC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hexaproc {

/// Base for numerical failures (as opposed to invalid arguments / config).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// No certified saddle point of Re f inside the search box.
struct NoSaddleError : NumericalError {
  using NumericalError::NumericalError;
};

/// Wavefunction evaluated inside a node region; phase is undefined there.
struct NodeError : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace hexaproc

#endif
