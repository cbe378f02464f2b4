#include "fdiv/error.hpp"

namespace fdv {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::BadFloor: return "BadFloor";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::DegenerateInterval: return "DegenerateInterval";
    case ErrorCode::NonPositiveArgument: return "NonPositiveArgument";
    case ErrorCode::NoGenerator: return "NoGenerator";
    case ErrorCode::NoClosedForm: return "NoClosedForm";
    case ErrorCode::BadInterval: return "BadInterval";
    case ErrorCode::DegeneratePair: return "DegeneratePair";
  }
  return "UnknownError";
}

}  // namespace fdv
