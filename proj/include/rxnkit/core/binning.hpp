#pragma once

#include "rxnkit/core/types.hpp"

namespace rxnkit {

// Axis-aligned rectangle in pixel space (continuous coordinates).
struct PixelRect {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }

  friend bool operator==(const PixelRect&, const PixelRect&) = default;
};

struct ImageDims {
  int width = 0;
  int height = 0;
};

// floor(c / extent * 1000) clamped to [0, 999]. A side that collapses after
// binning is widened by one bin on the max side (min side when already at 999).
// Throws Error(InvalidGeometry) for inverted or out-of-image rectangles.
BBox pixel_to_bins(const PixelRect& rect, ImageDims dims);

// Bin-center inverse: (bin + 0.5) / 1000 * extent.
PixelRect bins_to_pixels(const BBox& box, ImageDims dims);

double pixel_iou(const PixelRect& a, const PixelRect& b);

}  // namespace rxnkit
