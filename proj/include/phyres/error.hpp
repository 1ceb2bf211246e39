#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace phyres {

enum class ErrorCode {
  ParseError,
  Disconnected,
  MultiEdge,
  SelfLoop,
  BadLeafDegree,
  BadLeafLabels,
  InternalDegreeTooLow,
  NegativeWeight,
  UnknownNode,
  NotOneNested,
  NotBinary,
  NotATriangle,
  NotADegree3Node,
  DegenerateWeights,
  ZeroWeightEdge,
  SingularSystem,
  ReductionStuck,
  SizeMismatch,
  TooLargeForExact,
  NotFound,
  NotCircular,
  MissingTrivialSplits,
  NotRealizable,
  NotKalmanson,
  NotInvertible,
  OutOfRange,
  BadChord,
  NotOneCycle,
  PreconditionViolated,
  DomainError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::MultiEdge: return "MultiEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::BadLeafDegree: return "BadLeafDegree";
    case ErrorCode::BadLeafLabels: return "BadLeafLabels";
    case ErrorCode::InternalDegreeTooLow: return "InternalDegreeTooLow";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::NotOneNested: return "NotOneNested";
    case ErrorCode::NotBinary: return "NotBinary";
    case ErrorCode::NotATriangle: return "NotATriangle";
    case ErrorCode::NotADegree3Node: return "NotADegree3Node";
    case ErrorCode::DegenerateWeights: return "DegenerateWeights";
    case ErrorCode::ZeroWeightEdge: return "ZeroWeightEdge";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::ReductionStuck: return "ReductionStuck";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::TooLargeForExact: return "TooLargeForExact";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::NotCircular: return "NotCircular";
    case ErrorCode::MissingTrivialSplits: return "MissingTrivialSplits";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::NotKalmanson: return "NotKalmanson";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BadChord: return "BadChord";
    case ErrorCode::NotOneCycle: return "NotOneCycle";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::DomainError: return "DomainError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace phyres
