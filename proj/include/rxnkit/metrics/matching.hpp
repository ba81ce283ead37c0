#pragma once

#include <span>

#include "rxnkit/core/types.hpp"
#include "rxnkit/metrics/alignment.hpp"

namespace rxnkit::metrics {

// Role sets compared after mapping pred ids through the alignment; any
// unaligned pred id makes the match fail.
bool hard_match(const ReactionAnnotation& pred, const ReactionAnnotation& gt,
                const AlignmentMap& align);

// Str objects only: reactants and conditions are pooled, products compared
// separately. Txt objects are ignored on both sides.
bool soft_match(const ReactionAnnotation& pred, const ReactionAnnotation& gt,
                const AlignmentMap& align, std::span<const DetectedObject> pred_objects,
                std::span<const DetectedObject> gt_objects);

}  // namespace rxnkit::metrics
