#pragma once

#include <stdexcept>
#include <string>

namespace kotz {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// linalg
struct NotSymmetric : Error { using Error::Error; };
struct NotCorrelation : Error { using Error::Error; };
struct NotPositiveDefinite : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct EmptyComplement : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// qp_minimal_set
struct NoPositiveComponent : Error { using Error::Error; };
struct OracleAmbiguous : Error { using Error::Error; };

// kotz_model
struct NonPositiveArgument : Error { using Error::Error; };
struct InvalidShape : Error { using Error::Error; };
struct InconsistentP : Error { using Error::Error; };

// tail_engine / limit_laws
struct NormalizationViolated : Error { using Error::Error; };
struct ConditionViolated : Error { using Error::Error; };
struct NegativeThresholdOnJ : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct DegenerateGamma : Error { using Error::Error; };

// estimation
struct NonPositiveOrderStatistic : Error { using Error::Error; };
struct KnTooLarge : Error { using Error::Error; };
struct ZeroTailSpacings : Error { using Error::Error; };

// validation_harness
struct TooFewExceedances : Error { using Error::Error; };

}  // namespace kotz
