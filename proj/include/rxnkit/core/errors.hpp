#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rxnkit {

enum class ErrorCode {
  InvalidArgument,
  InvalidGeometry,
  Validation,
  Parse,
  Schema,
  LayoutOverflow,
  InvalidChain,
  InvalidBranch,
  InvalidCycle,
  UnsupportedSize,
  InternalConsistency,
  RecordExhaustion,
  Io,
  InvalidRatios,
  UnknownImage,
  IncompleteAssembly,
  InvalidReaction,
  InapplicableStep,
  NotAnalytic,
};

std::string_view to_string(ErrorCode code);

// Base exception for every library failure. The code is stable and is what
// callers (and the CLI exit-code mapping) should branch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class ParseErrorKind {
  UnexpectedEnd,
  UnexpectedToken,
  UnknownToken,
  UnbalancedMarker,
  EmptyReactants,
  EmptyProducts,
  CoordinateRange,
  InvalidGeometry,
  ConflictingObject,
  TrailingGarbage,
  MissingRole,
  UnknownRole,
  UnterminatedQuote,
  InvalidWord,
};

std::string_view to_string(ParseErrorKind kind);

// Grammar failure positioned at a byte offset of the input.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t offset, const std::string& detail);

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ParseErrorKind kind_;
  std::size_t offset_;
  std::string detail_;
};

}  // namespace rxnkit
