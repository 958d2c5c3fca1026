#pragma once

#include <stdexcept>
#include <string>

namespace hilbert {

enum class ErrorCode {
  kInvalidArgument,
  kPointOutsideDomain,
  kZeroDirection,
  kDegenerateInput,
  kSingularMatrix,
  kNotPolygonal,
  kBudgetExceeded,
  kInvalidSequence,
  kBadArity,
  kEmptyProfile,
  kParseError,
  kIoError,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// C API maps them one-to-one onto hb_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hilbert
