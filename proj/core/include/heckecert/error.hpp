#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace heckecert {

enum class ErrorKind {
  InvalidInput,
  InsufficientPrecision,
  BadPrime,
  NotSquarefree,
  NotFound,
  Unsupported,
  Precondition,
  Domain,
  NeedsLargerTruncation,
  NoConvergence,
  Internal,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (and the CLI
/// exit-code logic) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace heckecert
