#include "rxnkit/core/binning.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rxnkit/core/errors.hpp"

namespace rxnkit {

namespace {

int to_bin(double c, int extent) {
  double scaled = std::floor(c * kBinCount / extent);
  return static_cast<int>(std::clamp(scaled, 0.0, static_cast<double>(kMaxBin)));
}

void widen(int& lo, int& hi) {
  if (lo < hi) return;
  if (hi < kMaxBin) {
    hi = lo + 1;
  } else {
    lo = kMaxBin - 1;
    hi = kMaxBin;
  }
}

double from_bin(int bin, int extent) { return (bin + 0.5) / kBinCount * extent; }

}  // namespace

BBox pixel_to_bins(const PixelRect& rect, ImageDims dims) {
  if (dims.width <= 0 || dims.height <= 0) {
    throw Error(ErrorCode::InvalidGeometry, "image dimensions must be positive");
  }
  bool ok = std::isfinite(rect.x_min) && std::isfinite(rect.x_max) && std::isfinite(rect.y_min) &&
            std::isfinite(rect.y_max) && 0.0 <= rect.x_min && rect.x_min < rect.x_max &&
            rect.x_max <= dims.width && 0.0 <= rect.y_min && rect.y_min < rect.y_max &&
            rect.y_max <= dims.height;
  if (!ok) {
    std::ostringstream msg;
    msg << "rectangle (" << rect.x_min << "," << rect.y_min << "," << rect.x_max << ","
        << rect.y_max << ") is inverted or outside a " << dims.width << "x" << dims.height
        << " image";
    throw Error(ErrorCode::InvalidGeometry, msg.str());
  }
  BBox box{to_bin(rect.x_min, dims.width), to_bin(rect.y_min, dims.height),
           to_bin(rect.x_max, dims.width), to_bin(rect.y_max, dims.height)};
  widen(box.x_min, box.x_max);
  widen(box.y_min, box.y_max);
  return box;
}

PixelRect bins_to_pixels(const BBox& box, ImageDims dims) {
  return PixelRect{from_bin(box.x_min, dims.width), from_bin(box.y_min, dims.height),
                   from_bin(box.x_max, dims.width), from_bin(box.y_max, dims.height)};
}

double pixel_iou(const PixelRect& a, const PixelRect& b) {
  double iw = std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min);
  double ih = std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min);
  if (iw <= 0.0 || ih <= 0.0) return 0.0;
  double inter = iw * ih;
  double uni = a.width() * a.height() + b.width() * b.height() - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

}  // namespace rxnkit
