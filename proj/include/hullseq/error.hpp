#pragma once

#include <stdexcept>
#include <string>

namespace hullseq {

enum class ErrorKind {
  kInvalidArgument,
  kMalformedInput,
  kInvariantViolation,
  kIdMismatch,
  kPointOutsideDisk,
};

inline const char* error_id(ErrorKind k) {
  switch (k) {
    case ErrorKind::kInvalidArgument: return "E_INVALID_ARGUMENT";
    case ErrorKind::kMalformedInput: return "E_MALFORMED_INPUT";
    case ErrorKind::kInvariantViolation: return "E_INVARIANT_VIOLATION";
    case ErrorKind::kIdMismatch: return "E_ID_MISMATCH";
    case ErrorKind::kPointOutsideDisk: return "E_POINT_OUTSIDE_DISK";
  }
  return "E_UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hullseq
