#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eulersub {

/// Stable error names. The CLI prints these verbatim, so never rename one.
enum class ErrorCode {
  RadicandMismatch,
  DivisionByZero,
  RadicandDegenerate,
  NegativeRadicand,
  PoleEvaluation,
  ParabolicCase,
  PreconditionViolated,
  NoRealPoints,
  AnchorPoint,
  InexactParameterization,
  ParseError,
  DomainViolation,
  NonFiniteEvaluation,
  PoleInInterval,
  ArcMismatch,
  InvalidArgument,
  ToleranceExceeded,
};

std::string_view error_name(ErrorCode code);

/// Byte range into an expression source string.
struct SourceSpan {
  std::size_t offset = 0;
  std::size_t length = 0;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<SourceSpan> span = std::nullopt)
      : std::runtime_error(message), code_(code), span_(span) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const { return error_name(code_); }
  const std::optional<SourceSpan>& span() const noexcept { return span_; }

 private:
  ErrorCode code_;
  std::optional<SourceSpan> span_;
};

}  // namespace eulersub
