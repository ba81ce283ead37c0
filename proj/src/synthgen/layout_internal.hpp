#pragma once

// Helpers shared by the pattern planners. Planners work in an unbounded world
// frame and hand the result to fit_to_canvas.

#include <span>
#include <vector>

#include "rxnkit/core/errors.hpp"
#include "rxnkit/synthgen/condition_block.hpp"
#include "rxnkit/synthgen/layout.hpp"

namespace rxnkit::synthgen::detail {

Glyph make_plus(const Style& style);

// Arrow along a world-space polyline with its head at the last point.
// The glyph's anchor is set to label_anchor (world); placement maps local to world.
PlacedGlyph make_arrow(std::span<const Point> path, Point label_anchor, int reaction,
                       const Style& style);

PlacedGlyph place(Glyph glyph, Point top_left, std::vector<Provenance> provenance = {});

// Everything drawn around one arrow: the condition text block and a row of
// molecules (agents that parse as SMILES, extra reactants) above it.
struct Decoration {
  Glyph block;
  std::vector<Glyph> molecules;
  std::vector<Provenance> molecule_provenance;
  double row_width = 0.0;
  double row_height = 0.0;

  double width() const;
  // Extent above and below the centerline.
  double ascent(const Style& style) const;
  double descent(const Style& style) const;
  // Row bottom relative to the centerline (negative = above).
  double row_bottom(const Style& style) const;
};

struct DecorationInput {
  const ReactionRecord* record = nullptr;
  int reaction = 0;
  // Reactant indices drawn above the arrow rather than on the chain.
  std::vector<std::size_t> extra_reactants;
  ConditionBlockOptions block_options;
};

Decoration decorate(const DecorationInput& input, const Style& style, Rng& rng,
                    const Depictor& depictor);

// Recomposes the text block with a fixed gap; consumes no randomness.
void recompose_block(Decoration& d, const DecorationInput& input, const Style& style,
                     double gap_px);

// Appends the decoration's glyphs, centered horizontally on anchor with the
// block laid out around the anchor's centerline.
void place_decoration(const Decoration& d, Point anchor, int reaction, const Style& style,
                      std::vector<PlacedGlyph>& out);

// World-space word boxes and molecule rects of a placed decoration.
std::vector<Rect> decoration_ink(const Decoration& d, Point anchor, const Style& style);
// World-space block extent plus molecule rects.
std::vector<Rect> decoration_boxes(const Decoration& d, Point anchor, const Style& style);

// Horizontal run of molecules separated by plus signs, vertically centered on
// the axis. Used for reactant and product groups.
struct MoleculeGroup {
  std::vector<Glyph> molecules;
  std::vector<std::vector<Provenance>> provenance;

  double width(const Style& style) const;
  double half_height() const;
  void place_at(double x_left, double axis_y, const Style& style,
                std::vector<PlacedGlyph>& out) const;
};

// Scales and centers world-space glyphs into the canvas. Throws
// Error(LayoutOverflow) when the required scale is below kMinFitScale.
Layout fit_to_canvas(std::vector<PlacedGlyph> glyphs, const Style& style, Pattern pattern,
                     int reaction_count);

const Depictor& resolve(const Depictor* depictor);

void require_records(std::span<const ReactionRecord> records, ErrorCode code);

}  // namespace rxnkit::synthgen::detail
