#pragma once

#include <stdexcept>
#include <string>

namespace minsum {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define MINSUM_DEFINE_ERROR(Name)                                        \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& msg) : Error(#Name ": " + msg) {}   \
  }

MINSUM_DEFINE_ERROR(BadShape);             // edges/heights malformed
MINSUM_DEFINE_ERROR(NegativeHeight);       // a bin height is < 0
MINSUM_DEFINE_ERROR(NonNormalized);        // total mass deviates from 1
MINSUM_DEFINE_ERROR(ZeroMass);             // nothing to renormalize
MINSUM_DEFINE_ERROR(NegativeArgument);     // evaluation point below 0
MINSUM_DEFINE_ERROR(NonPositiveScale);     // dilation factor <= 0
MINSUM_DEFINE_ERROR(UndefinedConditional); // conditioning event has probability 0
MINSUM_DEFINE_ERROR(ZeroDenominator);      // both-large event has probability 0
MINSUM_DEFINE_ERROR(SamplerUnavailable);   // density has no inverse-cdf sampler
MINSUM_DEFINE_ERROR(InsufficientData);     // fit requested with too few points
MINSUM_DEFINE_ERROR(InfeasibleConstraint); // search constraint cannot be met
MINSUM_DEFINE_ERROR(EvaluationAlarm);      // proved inequality violated numerically

#undef MINSUM_DEFINE_ERROR

}  // namespace minsum
