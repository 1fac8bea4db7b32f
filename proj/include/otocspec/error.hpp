#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace otocspec {

enum class ErrorCode {
  NonHermitianInput,
  NumericalFailure,
  NotUnitary,
  SiteOutOfRange,
  EqualSites,
  MissingDisorder,
  UnknownFamily,
  WrongFamily,
  OddOrder,
  InvalidOrder,
  BadPhaseCount,
  SynthesisFailed,
  InvalidArgument,
  ConfigError,
  IoError,
};

std::string_view to_string(ErrorCode code);

// True for codes caused by bad input or configuration rather than by numerics.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace otocspec
