#pragma once

#include <stdexcept>
#include <string>

namespace geocover {

enum class ErrorCode {
  InvalidShape,
  NotConvex,
  InvalidPolygon,
  SingularTransform,
  DegenerateOverlap,
  DegeneracyUnresolved,
  CapExceeded,
  UncoveredPoint,
  Parse,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::InvalidPolygon: return "InvalidPolygon";
    case ErrorCode::SingularTransform: return "SingularTransform";
    case ErrorCode::DegenerateOverlap: return "DegenerateOverlap";
    case ErrorCode::DegeneracyUnresolved: return "DegeneracyUnresolved";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::UncoveredPoint: return "UncoveredPoint";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace geocover
