#include "trajaug/error.hpp"

#include <fmt/format.h>

namespace trajaug {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateTimestamp: return "DuplicateTimestamp";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::InvalidCoordinate: return "InvalidCoordinate";
    case ErrorCode::MissingLabel: return "MissingLabel";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::ReservedColumn: return "ReservedColumn";
    case ErrorCode::DegenerateBearing: return "DegenerateBearing";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::MissingLabelColumn: return "MissingLabelColumn";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::MultiplierBelowOne: return "MultiplierBelowOne";
    case ErrorCode::UnknownCandidate: return "UnknownCandidate";
    case ErrorCode::IdCollision: return "IdCollision";
    case ErrorCode::ClassTooSmall: return "ClassTooSmall";
    case ErrorCode::NOutOfRange: return "NOutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::EmptyTrainingSet: return "EmptyTrainingSet";
    case ErrorCode::ColumnMismatch: return "ColumnMismatch";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InconsistentLabel: return "InconsistentLabel";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(fmt::format("{}: {}", to_string(code), detail)), code_(code) {}

}  // namespace trajaug
