#include "rxnkit/synthgen/depictor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rxnkit/synthgen/smiles_formula.hpp"

namespace rxnkit::synthgen {

namespace {

// Rounded rectangle as a closed polyline, four arc samples per corner.
std::vector<Point> rounded_rect(double w, double h, double r) {
  std::vector<Point> pts;
  const Point centers[4] = {{w - r, r}, {w - r, h - r}, {r, h - r}, {r, r}};
  const double start[4] = {-90.0, 0.0, 90.0, 180.0};
  for (int c = 0; c < 4; ++c) {
    for (int k = 0; k <= 4; ++k) {
      double a = (start[c] + 22.5 * k) * std::numbers::pi / 180.0;
      pts.push_back({centers[c].x + r * std::cos(a), centers[c].y + r * std::sin(a)});
    }
  }
  return pts;
}

}  // namespace

Glyph FormulaDepictor::depict(std::string_view smiles, double scale, Rng& rng) const {
  auto counts = element_counts(smiles);
  std::string label = counts ? hill_formula(*counts) : std::string("?");

  const double font = 13.0 * scale;
  const double text_w = static_cast<double>(display_length(label)) * char_advance(font);
  Glyph g;
  g.kind = GlyphKind::Molecule;
  g.smiles = std::string(smiles);
  g.width = std::max(80.0 * scale, text_w + 28.0 * scale) * rng.uniform_real(1.0, 1.25);
  g.height = 62.0 * scale * rng.uniform_real(0.9, 1.2);

  double radius = std::min(g.width, g.height) * 0.18;
  g.strokes.push_back({rounded_rect(g.width, g.height, radius), 1.5 * scale, true, false});
  g.runs.push_back({{(g.width - text_w) / 2, g.height / 2 + 0.35 * font}, label, font});
  g.anchor = {g.width / 2, g.height / 2};
  return g;
}

const Depictor& default_depictor() {
  static const FormulaDepictor depictor;
  return depictor;
}

}  // namespace rxnkit::synthgen
