#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rxnkit/core/types.hpp"

namespace rxnkit::grammar {

// Renders 'text'[Role] items joined by commas, e.g. 'THF'[Svt],'25C'[Tem].
// Throws Error(InvalidArgument) for empty words, words containing whitespace,
// or words containing a single quote (which the surface syntax cannot carry).
std::string emit_condition_sequence(std::span<const ConditionWord> words);

// Inverse of emit_condition_sequence; whitespace between tokens is ignored.
// Throws ParseError (MissingRole, UnknownRole, UnterminatedQuote, ...).
std::vector<ConditionWord> parse_condition_sequence(std::string_view input);

}  // namespace rxnkit::grammar
