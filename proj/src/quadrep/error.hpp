#pragma once

#include <stdexcept>
#include <string>

namespace quadrep {

enum class ErrorCode {
  InvalidArgument,    // caller violated a precondition
  DimensionMismatch,  // variable counts or map dimensions disagree
  Format,             // malformed document or text form
  Certification,      // a claimed identity does not hold
  Numeric,            // a floating procedure could not reach its tolerance
  TooLarge,           // requested expansion exceeds the configured budget
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace quadrep
