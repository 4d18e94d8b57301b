#pragma once

#include <stdexcept>
#include <string>

namespace repdim {

enum class ErrorKind {
  Invalid,       // violated precondition or malformed mathematical input
  Mismatch,      // modulus / algebra / dimension mismatch
  CapExceeded,   // desk-scale cap hit
  Parse,         // malformed document
  Verification,  // a certificate or internal cross-check failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace repdim
