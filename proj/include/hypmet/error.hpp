#pragma once

#include <stdexcept>
#include <string>

namespace hypmet {

enum class ErrorCode {
  InvalidArgument = 1,
  DimensionMismatch = 2,
  OutsideDomain = 3,
  Unsupported = 4,
  Parse = 5,
  Io = 6,
};

// Every failure raised by the library carries one of the codes above; the C
// API maps them one-to-one onto hm_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hypmet
