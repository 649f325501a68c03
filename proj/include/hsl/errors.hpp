#pragma once

#include <stdexcept>
#include <string>

namespace hsl {

enum class ErrorKind {
  BadParameter,
  Unsupported,
  BadLift,
  DegenerateImmersion,
  GridTooCoarse,
  OutOfDomain,
  ContractViolation,
  Io,
};

// One exception type for the whole library; the kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::BadLift: return "BadLift";
    case ErrorKind::DegenerateImmersion: return "DegenerateImmersion";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::ContractViolation: return "ContractViolation";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

// CLI contract: 0 pass, 1 check failure, 2 bad parameter / unsupported,
// 3 numerical abort, 4 I/O.
inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::BadParameter:
    case ErrorKind::Unsupported:
    case ErrorKind::OutOfDomain: return 2;
    case ErrorKind::BadLift:
    case ErrorKind::DegenerateImmersion:
    case ErrorKind::GridTooCoarse:
    case ErrorKind::ContractViolation: return 3;
    case ErrorKind::Io: return 4;
  }
  return 3;
}

}  // namespace hsl
