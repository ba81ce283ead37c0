#pragma once

#include <string>

#include "rxnkit/synthgen/layout.hpp"

namespace rxnkit::synthgen {

// Deterministic SVG document. Object glyphs become <g data-object-id="N">
// groups (ids as in object_ids); arrows and plus signs are groups without an
// object id, arrows drawn as <path class="arrow"> plus a filled head.
std::string render_svg(const Layout& layout);

}  // namespace rxnkit::synthgen
