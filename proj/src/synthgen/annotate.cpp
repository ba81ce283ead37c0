#include "rxnkit/synthgen/annotate.hpp"

#include <algorithm>

#include "rxnkit/core/binning.hpp"
#include "rxnkit/core/errors.hpp"

namespace rxnkit::synthgen {

ImageAnnotation annotate(const Layout& layout, const std::string& image_id) {
  ImageAnnotation a;
  a.image_id = image_id;
  a.width_px = layout.canvas_width_px;
  a.height_px = layout.canvas_height_px;
  a.pattern = layout.pattern;
  a.reactions.resize(static_cast<std::size_t>(layout.reaction_count));

  const ImageDims dims{layout.canvas_width_px, layout.canvas_height_px};
  const std::vector<int> ids = object_ids(layout);
  for (std::size_t i = 0; i < layout.glyphs.size(); ++i) {
    const PlacedGlyph& g = layout.glyphs[i];
    if (ids[i] < 0) continue;
    const int id = ids[i];
    if (g.provenance.empty()) {
      throw Error(ErrorCode::InternalConsistency,
                  "placed glyph " + std::to_string(i) + " has no provenance");
    }
    Rect e = g.extent();
    PixelRect px{std::clamp(e.x_min, 0.0, double(dims.width)),
                 std::clamp(e.y_min, 0.0, double(dims.height)),
                 std::clamp(e.x_max, 0.0, double(dims.width)),
                 std::clamp(e.y_max, 0.0, double(dims.height))};
    bool text = g.glyph.kind == GlyphKind::TextBlock;
    a.objects.push_back({id, text ? ObjectClass::Txt : ObjectClass::Str, pixel_to_bins(px, dims)});
    if (text) {
      auto& words = a.condition_texts[id];
      for (const WordBox& w : g.glyph.words) words.push_back(w.word);
    } else {
      a.smiles[id] = g.glyph.smiles;
    }
    for (const Provenance& p : g.provenance) {
      if (p.reaction < 0 || p.reaction >= layout.reaction_count) {
        throw Error(ErrorCode::InternalConsistency,
                    "placed glyph " + std::to_string(i) + " names reaction " +
                        std::to_string(p.reaction));
      }
      ReactionAnnotation& r = a.reactions[static_cast<std::size_t>(p.reaction)];
      switch (p.role) {
        case ComponentRole::Reactant: r.reactants.push_back(id); break;
        case ComponentRole::Condition: r.conditions.push_back(id); break;
        case ComponentRole::Product: r.products.push_back(id); break;
      }
    }
  }
  for (std::size_t r = 0; r < a.reactions.size(); ++r) {
    ReactionAnnotation& rx = a.reactions[r];
    if (rx.reactants.empty() || rx.products.empty()) {
      throw Error(ErrorCode::InternalConsistency,
                  "reaction " + std::to_string(r) + " lacks reactants or products in the layout");
    }
    std::sort(rx.reactants.begin(), rx.reactants.end());
    std::sort(rx.conditions.begin(), rx.conditions.end());
    std::sort(rx.products.begin(), rx.products.end());
  }
  return a;
}

}  // namespace rxnkit::synthgen
