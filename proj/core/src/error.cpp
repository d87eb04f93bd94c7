#include "sylowlab/error.hpp"

namespace sylowlab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kNotAMember: return "NotAMember";
    case ErrorCode::kNotASubgroup: return "NotASubgroup";
    case ErrorCode::kNotNormal: return "NotNormal";
    case ErrorCode::kNotMaximal: return "NotMaximal";
    case ErrorCode::kNotProper: return "NotProper";
    case ErrorCode::kSylowNotContained: return "SylowNotContained";
    case ErrorCode::kNotPSolvable: return "NotPSolvable";
    case ErrorCode::kPreconditionFailed: return "PreconditionFailed";
    case ErrorCode::kOutOfDomain: return "OutOfDomain";
    case ErrorCode::kNoPElement: return "NoPElement";
    case ErrorCode::kClassNotCoverable: return "ClassNotCoverable";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kUnsupportedField: return "UnsupportedField";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> offset)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      offset_(offset) {}

}  // namespace sylowlab
