#pragma once

#include <stdexcept>
#include <string>

namespace mcg {

// Error categories surfaced through the C API as integer codes.
enum class ErrorCode : int {
  ok = 0,
  parse = 1,
  out_of_range = 2,
  genus_mismatch = 3,
  unknown_name = 4,
  precondition = 5,
  io = 6,
  validation = 7,
  internal = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mcg
