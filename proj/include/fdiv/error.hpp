#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fdv {

enum class ErrorCode {
  EmptyInput,
  NonPositiveEntry,
  NotNormalized,
  TooShort,
  LengthMismatch,
  BadDimension,
  BadFloor,
  ParseError,
  IoError,
  DegenerateInterval,
  NonPositiveArgument,
  NoGenerator,
  NoClosedForm,
  BadInterval,
  DegeneratePair,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fdv
