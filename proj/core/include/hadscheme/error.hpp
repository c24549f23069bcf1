#ifndef HADSCHEME_ERROR_HPP
#define HADSCHEME_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hadscheme {

enum class ErrorCode {
  NotAPartition,
  BadIdentity,
  NotClosedUnderTranspose,
  NonConstantIntersection,
  NotAGroup,
  NotOrthogonal,
  BadOrder,
  BadInput,
  OrderTooLarge,
  DegreeTooLarge,
  DimensionMismatch,
  DistanceMismatch,
  OrderUnsupported,
  ParseError,
};

inline const char *error_code_name(ErrorCode c) {
  switch (c) {
  case ErrorCode::NotAPartition: return "NotAPartition";
  case ErrorCode::BadIdentity: return "BadIdentity";
  case ErrorCode::NotClosedUnderTranspose: return "NotClosedUnderTranspose";
  case ErrorCode::NonConstantIntersection: return "NonConstantIntersection";
  case ErrorCode::NotAGroup: return "NotAGroup";
  case ErrorCode::NotOrthogonal: return "NotOrthogonal";
  case ErrorCode::BadOrder: return "BadOrder";
  case ErrorCode::BadInput: return "BadInput";
  case ErrorCode::OrderTooLarge: return "OrderTooLarge";
  case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::DistanceMismatch: return "DistanceMismatch";
  case ErrorCode::OrderUnsupported: return "OrderUnsupported";
  case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code(code) {}
  ErrorCode code;
};

} // namespace hadscheme

#endif
