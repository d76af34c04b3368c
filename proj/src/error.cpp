#include "cantor/error.hpp"

namespace cantor {

std::string_view errorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::NoSuchLevel: return "NoSuchLevel";
    case ErrorCode::InvalidEpsilon: return "InvalidEpsilon";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyAfterPruning: return "EmptyAfterPruning";
    case ErrorCode::MeasureTooSmall: return "MeasureTooSmall";
    case ErrorCode::ScheduleExceedsDepth: return "ScheduleExceedsDepth";
    case ErrorCode::ScheduleTooCoarse: return "ScheduleTooCoarse";
    case ErrorCode::NoHomogeneousTree: return "NoHomogeneousTree";
    case ErrorCode::OutOfTable: return "OutOfTable";
    case ErrorCode::InsufficientOnes: return "InsufficientOnes";
    case ErrorCode::NotInC: return "NotInC";
    case ErrorCode::EmptyCylinder: return "EmptyCylinder";
    case ErrorCode::InvalidCondition: return "InvalidCondition";
    case ErrorCode::EmptyTree: return "EmptyTree";
    case ErrorCode::MeasureBelowDelta: return "MeasureBelowDelta";
    case ErrorCode::NotPrefixClosed: return "NotPrefixClosed";
    case ErrorCode::UseViolation: return "UseViolation";
    case ErrorCode::SearchTooLarge: return "SearchTooLarge";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::MalformedCertificate: return "MalformedCertificate";
    case ErrorCode::UnknownVersion: return "UnknownVersion";
  }
  return "Unknown";
}

bool isMalformed(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput:
    case ErrorCode::MalformedCertificate:
    case ErrorCode::UnknownVersion:
    case ErrorCode::NotPrefixClosed:
      return true;
    default:
      return false;
  }
}

}  // namespace cantor
