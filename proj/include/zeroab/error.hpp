#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zeroab {

enum class ErrorKind {
  Validation,          // malformed input, schema violation
  DimensionMismatch,   // incompatible shapes or objects
  NoEnoughInjectives,  // construction needs an injective reflector
  NoEnoughProjectives, // construction needs a projective coreflector
  Precondition,        // e.g. non-idempotent, non-bimorphism, non-split
  BoundExceeded,       // brute-force search space too large
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::Validation: return "Validation";
  case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  case ErrorKind::NoEnoughInjectives: return "NoEnoughInjectives";
  case ErrorKind::NoEnoughProjectives: return "NoEnoughProjectives";
  case ErrorKind::Precondition: return "Precondition";
  case ErrorKind::BoundExceeded: return "BoundExceeded";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &message) {
  throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string &message) {
  if (!condition) fail(kind, message);
}

} // namespace zeroab
