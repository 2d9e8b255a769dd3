#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace evalkit {

enum class ErrorCode {
  UnsupportedFormat,
  CorruptFile,
  OutOfBounds,
  UnknownSpeaker,
  SampleRateTooLow,
  ClipTooShort,
  InsufficientWindows,
  ZeroNormEmbedding,
  EmptyInput,
  MissingAlignment,
  EmptyReference,
  MalformedResponse,
  TooManyMalformedResponses,
  InsufficientTrials,
  DegenerateInput,
  InsufficientRaters,
  BackendUnavailable,
  BackendMalformedResponse,
  DimensionMismatch,
  RateLimited,
  PayloadTooLarge,
  SchemaViolation,
  DuplicateId,
  NonPositiveDuration,
  EmptyGroup,
  IoError,
  UsageError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::CorruptFile: return "CorruptFile";
    case ErrorCode::OutOfBounds: return "OutOfBounds";
    case ErrorCode::UnknownSpeaker: return "UnknownSpeaker";
    case ErrorCode::SampleRateTooLow: return "SampleRateTooLow";
    case ErrorCode::ClipTooShort: return "ClipTooShort";
    case ErrorCode::InsufficientWindows: return "InsufficientWindows";
    case ErrorCode::ZeroNormEmbedding: return "ZeroNormEmbedding";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::MissingAlignment: return "MissingAlignment";
    case ErrorCode::EmptyReference: return "EmptyReference";
    case ErrorCode::MalformedResponse: return "MalformedResponse";
    case ErrorCode::TooManyMalformedResponses: return "TooManyMalformedResponses";
    case ErrorCode::InsufficientTrials: return "InsufficientTrials";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::InsufficientRaters: return "InsufficientRaters";
    case ErrorCode::BackendUnavailable: return "BackendUnavailable";
    case ErrorCode::BackendMalformedResponse: return "BackendMalformedResponse";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RateLimited: return "RateLimited";
    case ErrorCode::PayloadTooLarge: return "PayloadTooLarge";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::NonPositiveDuration: return "NonPositiveDuration";
    case ErrorCode::EmptyGroup: return "EmptyGroup";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace evalkit
