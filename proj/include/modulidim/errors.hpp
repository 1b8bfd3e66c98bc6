#pragma once

#include <stdexcept>
#include <string>

namespace modulidim {

// Input that violates a documented precondition (bad data, not a bug).
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotCoprimeError : ValidationError {
  using ValidationError::ValidationError;
};

struct NegativeH11Error : ValidationError {
  using ValidationError::ValidationError;
};

struct MissingWeightsError : ValidationError {
  using ValidationError::ValidationError;
};

struct UnsupportedContributionError : ValidationError {
  using ValidationError::ValidationError;
};

// Failures that arise while computing, on inputs that passed validation.
struct ComputationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonPolynomialError : ComputationError {
  using ComputationError::ComputationError;
};

struct RationalizationFailedError : ComputationError {
  using ComputationError::ComputationError;
};

struct InconsistentFormulasError : ComputationError {
  using ComputationError::ComputationError;
};

struct DegenerateMetricError : ComputationError {
  using ComputationError::ComputationError;
};

struct NoWitnessError : ComputationError {
  using ComputationError::ComputationError;
};

} // namespace modulidim
