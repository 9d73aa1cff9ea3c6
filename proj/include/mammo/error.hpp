#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mammo {

enum class ErrorCode {
  ContractViolation,
  InvalidInput,
  BadMagic,
  BadVersion,
  Truncated,
  Malformed,
  DimMismatch,
  LayerMismatch,
  HashMismatch,
  CorruptStream,
  CorruptContainer,
  Io,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ContractViolation: return "contract violation";
    case ErrorCode::InvalidInput: return "invalid input";
    case ErrorCode::BadMagic: return "bad magic";
    case ErrorCode::BadVersion: return "unsupported version";
    case ErrorCode::Truncated: return "truncated data";
    case ErrorCode::Malformed: return "malformed data";
    case ErrorCode::DimMismatch: return "dimension mismatch";
    case ErrorCode::LayerMismatch: return "layer mismatch";
    case ErrorCode::HashMismatch: return "model hash mismatch";
    case ErrorCode::CorruptStream: return "corrupt stream";
    case ErrorCode::CorruptContainer: return "corrupt container";
    case ErrorCode::Io: return "i/o error";
  }
  return "unknown error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) throw Error(code, what);
}

}  // namespace mammo
