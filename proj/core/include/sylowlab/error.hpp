#ifndef SYLOWLAB_ERROR_HPP_
#define SYLOWLAB_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sylowlab {

enum class ErrorCode {
  kDegreeMismatch,
  kOutOfRange,
  kCapExceeded,
  kNotAMember,
  kNotASubgroup,
  kNotNormal,
  kNotMaximal,
  kNotProper,
  kSylowNotContained,
  kNotPSolvable,
  kPreconditionFailed,
  kOutOfDomain,
  kNoPElement,
  kClassNotCoverable,
  kSyntaxError,
  kUnsupportedField,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// All recoverable failures in the library are reported through this type.
// Syntax errors additionally carry the byte offset of the offending input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> offset = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> offset_;
};

// Raised when an internal cross-check between two independent computations
// disagrees. Never expected in a correct build.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sylowlab

#endif  // SYLOWLAB_ERROR_HPP_
