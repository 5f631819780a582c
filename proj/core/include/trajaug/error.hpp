#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trajaug {

/// Failure categories raised by the library. Every error thrown by trajaug
/// is a trajaug::Error carrying one of these codes.
enum class ErrorCode {
  // dataset validation
  DuplicateTimestamp,
  TooFewPoints,
  InvalidCoordinate,
  MissingLabel,
  DuplicateId,
  ReservedColumn,
  // geodesy
  DegenerateBearing,
  // selection / balancing / evaluation preconditions
  EmptyDataset,
  MissingLabelColumn,
  InvalidParameter,
  MultiplierBelowOne,
  UnknownCandidate,
  IdCollision,
  ClassTooSmall,
  NOutOfRange,
  LengthMismatch,
  EmptyInput,
  EmptyTrainingSet,
  ColumnMismatch,
  // I/O
  MissingColumn,
  ParseError,
  InconsistentLabel,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace trajaug
