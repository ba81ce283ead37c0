#pragma once

#include <string>

#include "rxnkit/core/types.hpp"
#include "rxnkit/synthgen/layout.hpp"

namespace rxnkit::synthgen {

// Ground truth for a layout. Molecules become Str objects, text blocks Txt
// objects, with ids from object_ids. Reaction lists are ordered by id within
// each role. Throws Error(InternalConsistency) when an object glyph has no
// provenance or a reaction ends up without reactants or products.
ImageAnnotation annotate(const Layout& layout, const std::string& image_id);

}  // namespace rxnkit::synthgen
