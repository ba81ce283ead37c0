#pragma once

#include "rxnkit/core/rng.hpp"
#include "rxnkit/core/types.hpp"

namespace rxnkit::synthgen {

// One concrete draw from a StyleConfig.
struct Style {
  int font_px = 14;
  int line_width_px = 2;
  double molecule_scale = 1.0;
  int canvas_width_px = 1000;
  int canvas_height_px = 800;
  int padding_px = 20;

  double gap() const { return 10.0 + 0.5 * font_px; }
  double arrow_head() const { return 6.0 + 2.0 * line_width_px; }
  double min_arrow_length() const { return 30.0 + 4.0 * font_px; }
};

// Uniform draws within each configured range.
Style draw_style(const StyleConfig& config, Rng& rng);

// Midpoint of each range; used where a fixed style is convenient.
Style default_style(const StyleConfig& config = {});

}  // namespace rxnkit::synthgen
