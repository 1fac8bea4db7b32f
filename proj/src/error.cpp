#include "otocspec/error.hpp"

namespace otocspec {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonHermitianInput: return "NonHermitianInput";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::SiteOutOfRange: return "SiteOutOfRange";
    case ErrorCode::EqualSites: return "EqualSites";
    case ErrorCode::MissingDisorder: return "MissingDisorder";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::WrongFamily: return "WrongFamily";
    case ErrorCode::OddOrder: return "OddOrder";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::BadPhaseCount: return "BadPhaseCount";
    case ErrorCode::SynthesisFailed: return "SynthesisFailed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::NumericalFailure:
    case ErrorCode::NotUnitary:
    case ErrorCode::SynthesisFailed:
      return false;
    default:
      return true;
  }
}

}  // namespace otocspec
