#pragma once

#include <span>
#include <string>
#include <vector>

#include "rxnkit/core/errors.hpp"
#include "rxnkit/core/types.hpp"

namespace rxnkit {

enum class ViolationKind {
  InvalidDimensions,
  InvalidBBox,
  NegativeId,
  DuplicateId,
  DanglingId,
  EmptyReactants,
  EmptyProducts,
  ConditionTextOnNonText,
  SmilesOnNonStructure,
  UnknownKey,
  InvalidWord,
  EmptySmiles,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string field;  // e.g. "reactions[2].products"
  int id = -1;        // offending object id, -1 when not applicable
  std::string message;
};

std::vector<Violation> validate_reactions(std::span<const DetectedObject> objects,
                                          std::span<const ReactionAnnotation> reactions);

// Empty iff every ImageAnnotation invariant holds.
std::vector<Violation> validate_annotation(const ImageAnnotation& annotation);

std::string describe(const std::vector<Violation>& violations);

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

}  // namespace rxnkit
