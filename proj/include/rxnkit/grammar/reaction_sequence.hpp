#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rxnkit/core/types.hpp"

namespace rxnkit::grammar {

struct ParsedReactions {
  // Distinct objects in order of first appearance.
  std::vector<DetectedObject> objects;
  std::vector<ReactionAnnotation> reactions;

  friend bool operator==(const ParsedReactions&, const ParsedReactions&) = default;
};

// Canonical surface form:
//   [Rxn/st][Rct/st]{obj}...[Rct/ed][Cnd/st]{obj}...[Cnd/ed][Prd/st]{obj}...[Prd/ed][Rxn/ed]
// with each object rendered as [x1,y1,x2,y2,[Str|Txt],ID] using zero-padded
// three-digit coordinates. Throws ValidationError when the objects and
// reactions do not form a valid annotation.
std::string emit_reaction_sequence(std::span<const DetectedObject> objects,
                                   std::span<const ReactionAnnotation> reactions);

// Inverse of emit_reaction_sequence. Whitespace between tokens is ignored,
// and optional commas between objects or between reactions are accepted.
// Objects repeated with the same ID and identical tuple collapse into one.
// Throws ParseError with the byte offset of the first problem.
ParsedReactions parse_reaction_sequence(std::string_view input);

// emit(parse(s)).
std::string canonicalize_reaction_sequence(std::string_view input);

}  // namespace rxnkit::grammar
