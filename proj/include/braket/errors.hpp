#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace braket {

enum class ErrorCode {
  DimensionMismatch,
  Singular,
  NotHermitian,
  DegenerateMetric,
  WrongVariance,
  VarianceMismatch,
  KindMismatch,
  WrongKind,
  NotIdempotent,
  NotSemiHermitian,
  NotOrthonormalMetric,
  IndexOutOfRange,
  InvalidWeights,
  EqualWeights,
  WrongRepShape,
  SyntaxError,
  UnknownToken,
  VarianceError,
  UnboundName,
  SchemaError,
};

std::string_view to_string(ErrorCode code);

// Every domain failure in the library surfaces as this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  // Character offset into the source text, for parser errors.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::DegenerateMetric: return "DegenerateMetric";
    case ErrorCode::WrongVariance: return "WrongVariance";
    case ErrorCode::VarianceMismatch: return "VarianceMismatch";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NotSemiHermitian: return "NotSemiHermitian";
    case ErrorCode::NotOrthonormalMetric: return "NotOrthonormalMetric";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::EqualWeights: return "EqualWeights";
    case ErrorCode::WrongRepShape: return "WrongRepShape";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownToken: return "UnknownToken";
    case ErrorCode::VarianceError: return "VarianceError";
    case ErrorCode::UnboundName: return "UnboundName";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

}  // namespace braket
