#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cantor {

enum class ErrorCode {
  DepthExceeded,
  NoSuchLevel,
  InvalidEpsilon,
  InvalidArgument,
  EmptyAfterPruning,
  MeasureTooSmall,
  ScheduleExceedsDepth,
  ScheduleTooCoarse,
  NoHomogeneousTree,
  OutOfTable,
  InsufficientOnes,
  NotInC,
  EmptyCylinder,
  InvalidCondition,
  EmptyTree,
  MeasureBelowDelta,
  NotPrefixClosed,
  UseViolation,
  SearchTooLarge,
  MalformedInput,
  MalformedCertificate,
  UnknownVersion,
};

std::string_view errorName(ErrorCode code);

/// True for codes that signal unparseable or structurally invalid input,
/// as opposed to a well-formed input that fails a precondition.
bool isMalformed(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(errorName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cantor
