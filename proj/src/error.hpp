#pragma once

#include <stdexcept>
#include <string>

namespace stc {

enum class ErrorCode {
  kInvalidArgument = 1,
  kParse,
  kInvalidShore,
  kNotATree,
  kDisconnected,
  kBudgetExceeded,
  kPrecondition,
  kRefused,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace stc
