#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace infconn {

enum class ErrorCode {
  VertexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  DisconnectedGraph,
  NotATree,
  TooSmall,
  TooLarge,
  InfeasibleVector,
  NoConvergence,
  IterationCap,
  InvalidSpec,
  EmptyFactor,
  NonPositiveInput,
  Overflow,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InfeasibleVector: return "InfeasibleVector";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::IterationCap: return "IterationCap";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::EmptyFactor: return "EmptyFactor";
    case ErrorCode::NonPositiveInput: return "NonPositiveInput";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this exception type;
/// `code()` identifies the failure class, `what()` carries the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace infconn
