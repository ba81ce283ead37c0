#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rxnkit/core/rng.hpp"
#include "rxnkit/core/types.hpp"
#include "rxnkit/synthgen/depictor.hpp"
#include "rxnkit/synthgen/glyph.hpp"
#include "rxnkit/synthgen/style.hpp"

namespace rxnkit::synthgen {

// Layouts are fitted into the canvas by uniform downscaling; below this factor
// text and molecules become too small and planning fails.
inline constexpr double kMinFitScale = 0.7;

enum class ComponentRole { Reactant, Condition, Product };

std::string_view to_string(ComponentRole role);

struct Provenance {
  ComponentRole role = ComponentRole::Reactant;
  int reaction = 0;
  std::string field;  // e.g. "reactant_smiles[0]", "agents[1]", "conditions"

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

// canvas = scale * local + (dx, dy)
struct Placement {
  double scale = 1.0;
  double dx = 0.0;
  double dy = 0.0;

  Point apply(Point p) const { return {scale * p.x + dx, scale * p.y + dy}; }
  Rect apply(const Rect& r) const {
    return {scale * r.x_min + dx, scale * r.y_min + dy, scale * r.x_max + dx,
            scale * r.y_max + dy};
  }
  // this after inner
  Placement compose(const Placement& inner) const {
    return {scale * inner.scale, scale * inner.dx + dx, scale * inner.dy + dy};
  }
};

struct PlacedGlyph {
  Glyph glyph;
  Placement placement;
  // Molecules and text blocks; empty for arrows and plus signs.
  std::vector<Provenance> provenance;
  // Arrows: index of the reaction they depict.
  int arrow_of = -1;

  Rect extent() const { return placement.apply(Rect{0.0, 0.0, glyph.width, glyph.height}); }
  bool is_object() const {
    return glyph.kind == GlyphKind::Molecule || glyph.kind == GlyphKind::TextBlock;
  }
};

struct Layout {
  int canvas_width_px = 1000;
  int canvas_height_px = 800;
  Pattern pattern = Pattern::SingleLine;
  std::vector<PlacedGlyph> glyphs;
  int reaction_count = 0;
};

// Object id of every placed glyph in order (-1 for arrows and plus signs).
// Ids are assigned consecutively to object glyphs in placement order.
std::vector<int> object_ids(const Layout& layout);

struct ChainOptions {
  // Packing limit for multiple-line layouts; defaults to canvas width minus padding.
  std::optional<double> wrap_width_px;
  // Alternative limit as a fraction of the unwrapped line width.
  std::optional<double> wrap_fraction;
  const Depictor* depictor = nullptr;
};

// Left-to-right chain on one baseline. Record i+1's first reactant must equal
// record i's only product. Extra reactants of later records are drawn above
// their arrow.
Layout plan_single_line(std::span<const ReactionRecord> records, const Style& style, Rng& rng,
                        const ChainOptions& options = {});

// Same chain, greedily packed onto several baselines. Lines break only after a
// product; the next line starts from a re-drawn copy of that product.
Layout plan_multiple_line(std::span<const ReactionRecord> records, const Style& style, Rng& rng,
                          const ChainOptions& options = {});

inline constexpr double kMaxBranchAngleDeg = 30.0;

// 2-3 records sharing their first reactant.
Layout plan_branch(std::span<const ReactionRecord> records, const Style& style, Rng& rng,
                   const Depictor* depictor = nullptr);

// 3-9 records, each with one reactant and one product, where record i's
// product is record i+1's reactant (cyclically).
Layout plan_cycle(std::span<const ReactionRecord> records, const Style& style, Rng& rng,
                  const Depictor* depictor = nullptr);

// Checks the role-placement rule: Agt words above the associated arrow's
// centerline (the horizontal line through its label anchor), all other roles
// below. Returns one message per offending word.
std::vector<std::string> role_placement_violations(const Layout& layout);

}  // namespace rxnkit::synthgen
