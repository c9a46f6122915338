#include "core/error.hpp"

namespace cx {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SingularConic: return "SingularConic";
    case ErrorCode::WitnessOnConic: return "WitnessOnConic";
    case ErrorCode::ZeroBlend: return "ZeroBlend";
    case ErrorCode::NotAParabola: return "NotAParabola";
    case ErrorCode::NonpositiveParameter: return "NonpositiveParameter";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::SingularPencilMember: return "SingularPencilMember";
    case ErrorCode::NumericalRootFailure: return "NumericalRootFailure";
    case ErrorCode::NoInscribedParabola: return "NoInscribedParabola";
    case ErrorCode::UnboundedParameter: return "UnboundedParameter";
    case ErrorCode::NoCommonInterior: return "NoCommonInterior";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::VerificationFailure: return "VerificationFailure";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace cx
