#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hsplit {

enum class ErrorCode {
  NotAdjacent,
  TiedCounts,
  ParallelTransversal,
  NotClose,
  NotDistant,
  UnknownCurve,
  EmptyIntersection,
  MalformedDescriptor,
  XNotDistant,
  YNotDistant,
  ANotRemote,
  BNotRemote,
  XNotRemote,
  NotPairMode,
  ParseError,
  FlagError,
  Overflow,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::TiedCounts: return "TiedCounts";
    case ErrorCode::ParallelTransversal: return "ParallelTransversal";
    case ErrorCode::NotClose: return "NotClose";
    case ErrorCode::NotDistant: return "NotDistant";
    case ErrorCode::UnknownCurve: return "UnknownCurve";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
    case ErrorCode::MalformedDescriptor: return "MalformedDescriptor";
    case ErrorCode::XNotDistant: return "XNotDistant";
    case ErrorCode::YNotDistant: return "YNotDistant";
    case ErrorCode::ANotRemote: return "ANotRemote";
    case ErrorCode::BNotRemote: return "BNotRemote";
    case ErrorCode::XNotRemote: return "XNotRemote";
    case ErrorCode::NotPairMode: return "NotPairMode";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::FlagError: return "FlagError";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a stable code; the CLI maps
/// codes to exit statuses and the JSON report.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hsplit
