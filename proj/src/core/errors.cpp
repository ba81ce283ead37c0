#include "rxnkit/core/errors.hpp"

namespace rxnkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::InvalidGeometry: return "invalid-geometry";
    case ErrorCode::Validation: return "validation";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Schema: return "schema";
    case ErrorCode::LayoutOverflow: return "layout-overflow";
    case ErrorCode::InvalidChain: return "invalid-chain";
    case ErrorCode::InvalidBranch: return "invalid-branch";
    case ErrorCode::InvalidCycle: return "invalid-cycle";
    case ErrorCode::UnsupportedSize: return "unsupported-size";
    case ErrorCode::InternalConsistency: return "internal-consistency";
    case ErrorCode::RecordExhaustion: return "record-exhaustion";
    case ErrorCode::Io: return "io";
    case ErrorCode::InvalidRatios: return "invalid-ratios";
    case ErrorCode::UnknownImage: return "unknown-image";
    case ErrorCode::IncompleteAssembly: return "incomplete-assembly";
    case ErrorCode::InvalidReaction: return "invalid-reaction";
    case ErrorCode::InapplicableStep: return "inapplicable-step";
    case ErrorCode::NotAnalytic: return "not-analytic";
  }
  return "unknown";
}

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::UnexpectedEnd: return "unexpected-end";
    case ParseErrorKind::UnexpectedToken: return "unexpected-token";
    case ParseErrorKind::UnknownToken: return "unknown-token";
    case ParseErrorKind::UnbalancedMarker: return "unbalanced-marker";
    case ParseErrorKind::EmptyReactants: return "empty-reactants";
    case ParseErrorKind::EmptyProducts: return "empty-products";
    case ParseErrorKind::CoordinateRange: return "coordinate-range";
    case ParseErrorKind::InvalidGeometry: return "invalid-geometry";
    case ParseErrorKind::ConflictingObject: return "conflicting-object";
    case ParseErrorKind::TrailingGarbage: return "trailing-garbage";
    case ParseErrorKind::MissingRole: return "missing-role";
    case ParseErrorKind::UnknownRole: return "unknown-role";
    case ParseErrorKind::UnterminatedQuote: return "unterminated-quote";
    case ParseErrorKind::InvalidWord: return "invalid-word";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

ParseError::ParseError(ParseErrorKind kind, std::size_t offset, const std::string& detail)
    : Error(ErrorCode::Parse, std::string(to_string(kind)) + " at byte " +
                                  std::to_string(offset) + ": " + detail),
      kind_(kind),
      offset_(offset),
      detail_(detail) {}

}  // namespace rxnkit
