#pragma once

#include <stdexcept>
#include <string>

namespace prandtl {

/* Error taxonomy shared by all solver components. Everything derives from
 * SolverError so callers can catch the whole family at the experiment layer. */
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonConvergence : SolverError {
  using SolverError::SolverError;
};
struct GridMismatch : SolverError {
  using SolverError::SolverError;
};
struct NonPositiveVelocity : SolverError {
  using SolverError::SolverError;
};
struct DegenerateDenominator : SolverError {
  using SolverError::SolverError;
};
struct AmplitudeTooLarge : SolverError {
  using SolverError::SolverError;
};
struct LinearSolveFailure : SolverError {
  using SolverError::SolverError;
};
struct MaximumPrincipleViolation : SolverError {
  using SolverError::SolverError;
};
struct OrderingViolation : SolverError {
  using SolverError::SolverError;
};
struct OutOfDomain : SolverError {
  using SolverError::SolverError;
};
struct InsufficientHistory : SolverError {
  using SolverError::SolverError;
};
struct NonPositiveValue : SolverError {
  using SolverError::SolverError;
};
struct QuadratureDivergence : SolverError {
  using SolverError::SolverError;
};
struct ShiftSingular : SolverError {
  using SolverError::SolverError;
};
struct ConfigError : SolverError {
  using SolverError::SolverError;
};

}  // namespace prandtl
