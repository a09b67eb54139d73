#pragma once

#include <stdexcept>
#include <string>

namespace crmostow {

enum class ErrorCode {
  InvalidArgument,
  ShapeMismatch,
  NotClosed,
  NotInAmbient,
  IrrationalWeights,
  NotSplittable,
  MembershipFailed,
  AscentStalled,
  CertificateFailed,
  EmptyCharacteristicSpace,
  NotPositiveDefinite,
  CrossCheckDivergence,
  QuadratureFailure,
  NonConvergent,
  RestartDisagreement,
  NoRootFound,
  NoiseDominated,
  UnknownEntry,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace crmostow
