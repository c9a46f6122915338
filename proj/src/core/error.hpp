#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cx {

enum class ErrorCode {
  InvalidArgument,
  SingularConic,
  WitnessOnConic,
  ZeroBlend,
  NotAParabola,
  NonpositiveParameter,
  DegenerateTriangle,
  SingularPencilMember,
  NumericalRootFailure,
  NoInscribedParabola,
  UnboundedParameter,
  NoCommonInterior,
  PreconditionViolation,
  VerificationFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every domain failure in the library is reported through this type; the C
// layer maps the code onto a status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace cx
