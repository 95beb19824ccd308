#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace splitpeb {

enum class ErrorCode {
  BadEdge,
  NotAClique,
  NotIndependent,
  Disconnected,
  NotSplit,
  InvalidArgument,
  PreconditionViolated,
  BudgetExceeded,
  NotApplicable,
  NotATree,
  WeightDoublingViolated,
  RootWeightNonzero,
  ZeroStrategy,
  RootMismatch,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadEdge: return "BadEdge";
    case ErrorCode::NotAClique: return "NotAClique";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotSplit: return "NotSplit";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::WeightDoublingViolated: return "WeightDoublingViolated";
    case ErrorCode::RootWeightNonzero: return "RootWeightNonzero";
    case ErrorCode::ZeroStrategy: return "ZeroStrategy";
    case ErrorCode::RootMismatch: return "RootMismatch";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }
  [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace splitpeb
