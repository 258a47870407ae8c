#include "arcmodel/errors.hpp"

namespace arcmodel {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::DivisionByZeroCoefficient: return "DivisionByZeroCoefficient";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::ResidueOrderUndetectable: return "ResidueOrderUndetectable";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::NotOnStratum: return "NotOnStratum";
    case ErrorCode::NoFiniteMinor: return "NoFiniteMinor";
    case ErrorCode::PointNotOnVariety: return "PointNotOnVariety";
    case ErrorCode::MissingComponentData: return "MissingComponentData";
    case ErrorCode::EmptyVariety: return "EmptyVariety";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::BoundViolated: return "BoundViolated";
    case ErrorCode::DefectNotContracting: return "DefectNotContracting";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

int error_exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownVariable:
    case ErrorCode::DivisionByZeroCoefficient:
    case ErrorCode::SchemaError:
      return 2;
    case ErrorCode::ResourceLimit:
      return 4;
    case ErrorCode::BoundViolated:
    case ErrorCode::DefectNotContracting:
    case ErrorCode::Internal:
      return 5;
    default:
      return 3;
  }
}

std::string Error::format(ErrorCode code, const std::string& msg,
                          const std::string& loc) {
  std::string out = error_code_name(code);
  out += ": ";
  out += msg;
  if (!loc.empty()) {
    out += " [";
    out += loc;
    out += "]";
  }
  return out;
}

}  // namespace arcmodel
