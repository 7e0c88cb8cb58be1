#pragma once

#include <stdexcept>
#include <string>

namespace upcmr {

// Error codes shared with the C API and the CLI exit status convention:
// 2 usage, 3 data, 4 numerical failure.
enum class ErrorCode : int {
  kUsage = 2,
  kData = 3,
  kNumeric = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }
  int code_int() const { return static_cast<int>(code_); }

 private:
  ErrorCode code_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& msg) : Error(ErrorCode::kUsage, msg) {}
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& msg) : Error(ErrorCode::kData, msg) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& msg) : Error(ErrorCode::kNumeric, msg) {}
};

}  // namespace upcmr
