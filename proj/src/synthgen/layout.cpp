#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "layout_internal.hpp"
#include "rxnkit/core/errors.hpp"
#include "rxnkit/synthgen/smiles_formula.hpp"

namespace rxnkit::synthgen {

std::string_view to_string(ComponentRole role) {
  switch (role) {
    case ComponentRole::Reactant: return "reactant";
    case ComponentRole::Condition: return "condition";
    case ComponentRole::Product: return "product";
  }
  return "?";
}

std::vector<int> object_ids(const Layout& layout) {
  std::vector<int> ids;
  ids.reserve(layout.glyphs.size());
  int next = 0;
  for (const PlacedGlyph& g : layout.glyphs) ids.push_back(g.is_object() ? next++ : -1);
  return ids;
}

std::vector<std::string> role_placement_violations(const Layout& layout) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < layout.glyphs.size(); ++i) {
    const PlacedGlyph& g = layout.glyphs[i];
    if (g.glyph.kind != GlyphKind::TextBlock || g.provenance.empty()) continue;
    int reaction = g.provenance.front().reaction;
    auto arrow = std::find_if(layout.glyphs.begin(), layout.glyphs.end(),
                              [&](const PlacedGlyph& a) { return a.arrow_of == reaction; });
    if (arrow == layout.glyphs.end()) {
      out.push_back("text block " + std::to_string(i) + " has no arrow for reaction " +
                    std::to_string(reaction));
      continue;
    }
    double centerline = arrow->placement.apply(arrow->glyph.anchor).y;
    for (const WordBox& w : g.glyph.words) {
      double cy = g.placement.apply(w.box).center().y;
      bool above = w.word.role == ConditionRole::Agt;
      if (above ? cy >= centerline : cy <= centerline) {
        std::ostringstream s;
        s << "word '" << w.word.text << "' (" << to_string(w.word.role) << ") of reaction "
          << reaction << " at y=" << cy << " is on the wrong side of centerline y="
          << centerline;
        out.push_back(s.str());
      }
    }
  }
  return out;
}

namespace detail {

const Depictor& resolve(const Depictor* depictor) {
  return depictor ? *depictor : default_depictor();
}

void require_records(std::span<const ReactionRecord> records, ErrorCode code) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].reactant_smiles.empty() || records[i].product_smiles.empty()) {
      throw Error(code, "record " + std::to_string(i) +
                            " needs at least one reactant and one product SMILES");
    }
  }
}

Glyph make_plus(const Style& style) {
  Glyph g;
  g.kind = GlyphKind::PlusSign;
  double s = 1.0 * style.font_px;
  g.width = s;
  g.height = s;
  double lw = style.line_width_px;
  g.strokes.push_back({{{0.15 * s, s / 2}, {0.85 * s, s / 2}}, lw, false, false});
  g.strokes.push_back({{{s / 2, 0.15 * s}, {s / 2, 0.85 * s}}, lw, false, false});
  g.anchor = {s / 2, s / 2};
  return g;
}

PlacedGlyph make_arrow(std::span<const Point> path, Point label_anchor, int reaction,
                       const Style& style) {
  const double head = style.arrow_head();
  const double lw = style.line_width_px;
  std::vector<Point> shaft(path.begin(), path.end());
  Point tip = shaft.back();
  Point prev = shaft[shaft.size() - 2];
  double dx = tip.x - prev.x;
  double dy = tip.y - prev.y;
  double len = std::hypot(dx, dy);
  double ux = len > 0 ? dx / len : 1.0;
  double uy = len > 0 ? dy / len : 0.0;
  Point base{tip.x - ux * head, tip.y - uy * head};
  shaft.back() = base;
  std::vector<Point> tri = {tip,
                            {base.x - uy * head * 0.45, base.y + ux * head * 0.45},
                            {base.x + uy * head * 0.45, base.y - ux * head * 0.45}};

  Rect bounds{tip.x, tip.y, tip.x, tip.y};
  for (const auto* pts : {&shaft, &tri}) {
    for (Point p : *pts) bounds = bounds.united({p.x, p.y, p.x, p.y});
  }
  bounds = bounds.expanded(lw);

  auto local = [&](std::vector<Point> pts) {
    for (Point& p : pts) p = {p.x - bounds.x_min, p.y - bounds.y_min};
    return pts;
  };
  PlacedGlyph out;
  out.glyph.kind = GlyphKind::Arrow;
  out.glyph.width = bounds.width();
  out.glyph.height = bounds.height();
  out.glyph.strokes.push_back({local(shaft), lw, false, false});
  out.glyph.strokes.push_back({local(tri), lw, true, true});
  out.glyph.anchor = {label_anchor.x - bounds.x_min, label_anchor.y - bounds.y_min};
  out.placement = {1.0, bounds.x_min, bounds.y_min};
  out.arrow_of = reaction;
  return out;
}

PlacedGlyph place(Glyph glyph, Point top_left, std::vector<Provenance> provenance) {
  PlacedGlyph p;
  p.glyph = std::move(glyph);
  p.placement = {1.0, top_left.x, top_left.y};
  p.provenance = std::move(provenance);
  return p;
}

namespace {

double arrow_half(const Style& style) { return 0.5 * style.arrow_head(); }
double row_spacing(const Style& style) { return 0.5 * style.gap(); }
bool has_above_text(const Glyph& block) { return !block.empty() && block.anchor.y > 0.0; }

void measure_row(Decoration& d, const Style& style) {
  d.row_width = 0.0;
  d.row_height = 0.0;
  for (std::size_t i = 0; i < d.molecules.size(); ++i) {
    d.row_width += d.molecules[i].width + (i ? row_spacing(style) : 0.0);
    d.row_height = std::max(d.row_height, d.molecules[i].height);
  }
}

}  // namespace

double Decoration::width() const {
  return std::max(block.empty() ? 0.0 : block.width, row_width);
}

double Decoration::row_bottom(const Style& style) const {
  double top = -arrow_half(style);
  if (has_above_text(block)) top = std::min(top, -block.anchor.y);
  return top - 0.3 * style.font_px;
}

double Decoration::ascent(const Style& style) const {
  double a = arrow_half(style);
  if (has_above_text(block)) a = std::max(a, block.anchor.y);
  if (!molecules.empty()) a = std::max(a, -row_bottom(style) + row_height);
  return a;
}

double Decoration::descent(const Style& style) const {
  double d = arrow_half(style);
  if (!block.empty()) d = std::max(d, block.height - block.anchor.y);
  return d;
}

Decoration decorate(const DecorationInput& input, const Style& style, Rng& rng,
                    const Depictor& depictor) {
  const ReactionRecord& record = *input.record;
  Decoration d;
  for (std::size_t j : input.extra_reactants) {
    d.molecules.push_back(depictor.depict(record.reactant_smiles[j], style.molecule_scale, rng));
    d.molecule_provenance.push_back({ComponentRole::Reactant, input.reaction,
                                     "reactant_smiles[" + std::to_string(j) + "]"});
  }
  if (input.block_options.agents == AgentDepiction::SeparateMolecules) {
    for (std::size_t j : molecular_agents(record)) {
      d.molecules.push_back(depictor.depict(record.agents[j], style.molecule_scale, rng));
      d.molecule_provenance.push_back(
          {ComponentRole::Condition, input.reaction, "agents[" + std::to_string(j) + "]"});
    }
  }
  measure_row(d, style);
  d.block = compose_condition_block(record, style, rng, input.block_options);
  return d;
}

void recompose_block(Decoration& d, const DecorationInput& input, const Style& style,
                     double gap_px) {
  ConditionBlockOptions options = input.block_options;
  options.gap_px = gap_px;
  Rng unused(0);
  d.block = compose_condition_block(*input.record, style, unused, options);
}

namespace {

Point block_origin(const Decoration& d, Point anchor) {
  return {anchor.x - d.block.anchor.x, anchor.y - d.block.anchor.y};
}

std::vector<Rect> molecule_rects(const Decoration& d, Point anchor, const Style& style) {
  std::vector<Rect> out;
  double x = anchor.x - d.row_width / 2;
  double bottom = anchor.y + d.row_bottom(style);
  for (std::size_t i = 0; i < d.molecules.size(); ++i) {
    const Glyph& m = d.molecules[i];
    out.push_back({x, bottom - m.height, x + m.width, bottom});
    x += m.width + row_spacing(style);
  }
  return out;
}

}  // namespace

void place_decoration(const Decoration& d, Point anchor, int reaction, const Style& style,
                      std::vector<PlacedGlyph>& out) {
  auto rects = molecule_rects(d, anchor, style);
  for (std::size_t i = 0; i < d.molecules.size(); ++i) {
    out.push_back(place(d.molecules[i], {rects[i].x_min, rects[i].y_min},
                        {d.molecule_provenance[i]}));
  }
  if (!d.block.empty()) {
    out.push_back(place(d.block, block_origin(d, anchor),
                        {{ComponentRole::Condition, reaction, "conditions"}}));
  }
}

std::vector<Rect> decoration_ink(const Decoration& d, Point anchor, const Style& style) {
  std::vector<Rect> out = molecule_rects(d, anchor, style);
  Point o = block_origin(d, anchor);
  for (const WordBox& w : d.block.words) {
    out.push_back({w.box.x_min + o.x, w.box.y_min + o.y, w.box.x_max + o.x, w.box.y_max + o.y});
  }
  return out;
}

std::vector<Rect> decoration_boxes(const Decoration& d, Point anchor, const Style& style) {
  std::vector<Rect> out = molecule_rects(d, anchor, style);
  if (!d.block.empty()) {
    Point o = block_origin(d, anchor);
    out.push_back({o.x, o.y, o.x + d.block.width, o.y + d.block.height});
  }
  return out;
}

double MoleculeGroup::width(const Style& style) const {
  double w = 0.0;
  for (std::size_t i = 0; i < molecules.size(); ++i) {
    w += molecules[i].width;
    if (i) w += style.font_px + 2 * row_spacing(style);
  }
  return w;
}

double MoleculeGroup::half_height() const {
  double h = 0.0;
  for (const Glyph& m : molecules) h = std::max(h, m.height / 2);
  return h;
}

void MoleculeGroup::place_at(double x_left, double axis_y, const Style& style,
                             std::vector<PlacedGlyph>& out) const {
  double x = x_left;
  for (std::size_t i = 0; i < molecules.size(); ++i) {
    if (i) {
      Glyph plus = make_plus(style);
      x += row_spacing(style);
      out.push_back(place(plus, {x, axis_y - plus.height / 2}));
      x += plus.width + row_spacing(style);
    }
    out.push_back(place(molecules[i], {x, axis_y - molecules[i].height / 2}, provenance[i]));
    x += molecules[i].width;
  }
}

Layout fit_to_canvas(std::vector<PlacedGlyph> glyphs, const Style& style, Pattern pattern,
                     int reaction_count) {
  Layout layout;
  layout.canvas_width_px = style.canvas_width_px;
  layout.canvas_height_px = style.canvas_height_px;
  layout.pattern = pattern;
  layout.reaction_count = reaction_count;
  if (glyphs.empty()) return layout;

  Rect bounds = glyphs.front().extent();
  for (const PlacedGlyph& g : glyphs) bounds = bounds.united(g.extent());
  double avail_w = style.canvas_width_px - 2.0 * style.padding_px;
  double avail_h = style.canvas_height_px - 2.0 * style.padding_px;
  double scale = std::min({1.0, avail_w / bounds.width(), avail_h / bounds.height()});
  if (!(scale >= kMinFitScale)) {
    std::ostringstream s;
    s << "content of " << bounds.width() << "x" << bounds.height() << " px needs scale " << scale
      << " to fit the " << style.canvas_width_px << "x" << style.canvas_height_px
      << " canvas; minimum is " << kMinFitScale;
    throw Error(ErrorCode::LayoutOverflow, s.str());
  }
  Point c = bounds.center();
  Placement fit{scale, style.canvas_width_px / 2.0 - scale * c.x,
                style.canvas_height_px / 2.0 - scale * c.y};
  for (PlacedGlyph& g : glyphs) g.placement = fit.compose(g.placement);
  layout.glyphs = std::move(glyphs);
  return layout;
}

}  // namespace detail

}  // namespace rxnkit::synthgen
