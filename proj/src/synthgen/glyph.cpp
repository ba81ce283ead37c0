#include "rxnkit/synthgen/glyph.hpp"

#include <algorithm>
#include <cmath>

#include "rxnkit/core/utf8.hpp"
#include "rxnkit/synthgen/style.hpp"

namespace rxnkit::synthgen {

Rect Rect::united(const Rect& o) const {
  return {std::min(x_min, o.x_min), std::min(y_min, o.y_min), std::max(x_max, o.x_max),
          std::max(y_max, o.y_max)};
}

bool Rect::intersects(const Rect& o) const {
  return x_min < o.x_max && o.x_min < x_max && y_min < o.y_max && o.y_min < y_max;
}

bool Rect::contains(Point p) const {
  return x_min <= p.x && p.x <= x_max && y_min <= p.y && p.y <= y_max;
}

bool segment_intersects_rect(Point a, Point b, const Rect& r) {
  // Liang-Barsky clipping.
  double t0 = 0.0;
  double t1 = 1.0;
  double dx = b.x - a.x;
  double dy = b.y - a.y;
  auto clip = [&](double p, double q) {
    if (p == 0.0) return q >= 0.0;
    double t = q / p;
    if (p < 0.0) {
      if (t > t1) return false;
      t0 = std::max(t0, t);
    } else {
      if (t < t0) return false;
      t1 = std::min(t1, t);
    }
    return true;
  };
  return clip(-dx, a.x - r.x_min) && clip(dx, r.x_max - a.x) && clip(-dy, a.y - r.y_min) &&
         clip(dy, r.y_max - a.y) && t0 <= t1;
}

bool polyline_intersects_rect(std::span<const Point> path, const Rect& r) {
  if (path.size() == 1) return r.contains(path[0]);
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (segment_intersects_rect(path[i - 1], path[i], r)) return true;
  }
  return false;
}

std::string_view to_string(GlyphKind kind) {
  switch (kind) {
    case GlyphKind::Molecule: return "molecule";
    case GlyphKind::TextBlock: return "text";
    case GlyphKind::PlusSign: return "plus";
    case GlyphKind::Arrow: return "arrow";
  }
  return "?";
}

double char_advance(double font_px) { return 0.6 * font_px; }
double line_height(double font_px) { return 1.25 * font_px; }

std::size_t display_length(std::string_view utf8) { return decode_utf8(utf8).size(); }

Style draw_style(const StyleConfig& config, Rng& rng) {
  Style s;
  s.font_px = rng.uniform_int(config.font_size_px.lo, config.font_size_px.hi);
  s.line_width_px = rng.uniform_int(config.line_width_px.lo, config.line_width_px.hi);
  s.molecule_scale = rng.uniform_real(config.molecule_scale.lo, config.molecule_scale.hi);
  s.canvas_width_px = config.canvas_width_px;
  s.canvas_height_px = config.canvas_height_px;
  s.padding_px = config.padding_px;
  return s;
}

Style default_style(const StyleConfig& config) {
  Style s;
  s.font_px = (config.font_size_px.lo + config.font_size_px.hi) / 2;
  s.line_width_px = (config.line_width_px.lo + config.line_width_px.hi) / 2;
  s.molecule_scale = (config.molecule_scale.lo + config.molecule_scale.hi) / 2;
  s.canvas_width_px = config.canvas_width_px;
  s.canvas_height_px = config.canvas_height_px;
  s.padding_px = config.padding_px;
  return s;
}

}  // namespace rxnkit::synthgen
