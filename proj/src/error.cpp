#include "ewrithe/error.h"

namespace ewrithe {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ReducibleParametrization: return "ReducibleParametrization";
    case ErrorKind::CuspDetected: return "CuspDetected";
    case ErrorKind::RealSingularityDetected: return "RealSingularityDetected";
    case ErrorKind::ComponentsIntersect: return "ComponentsIntersect";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::SamplingExhausted: return "SamplingExhausted";
    case ErrorKind::CenterOnCurve: return "CenterOnCurve";
    case ErrorKind::CenterOnSingularLine: return "CenterOnSingularLine";
    case ErrorKind::DegenerateElimination: return "DegenerateElimination";
    case ErrorKind::NonGenericProjection: return "NonGenericProjection";
    case ErrorKind::TangentialPair: return "TangentialPair";
    case ErrorKind::ZeroDeterminant: return "ZeroDeterminant";
    case ErrorKind::MissingOrientation: return "MissingOrientation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::string witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message +
                         (witness.empty() ? std::string() : " [witness: " + witness + "]")),
      kind_(kind),
      witness_(std::move(witness)) {}

}  // namespace ewrithe
