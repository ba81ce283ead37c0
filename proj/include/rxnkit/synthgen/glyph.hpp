#pragma once

#include <span>
#include <string>
#include <vector>

#include "rxnkit/core/types.hpp"

namespace rxnkit::synthgen {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Rect {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  Point center() const { return {(x_min + x_max) / 2, (y_min + y_max) / 2}; }
  Rect expanded(double by) const { return {x_min - by, y_min - by, x_max + by, y_max + by}; }
  Rect united(const Rect& o) const;
  bool intersects(const Rect& o) const;
  bool contains(Point p) const;

  friend bool operator==(const Rect&, const Rect&) = default;
};

bool segment_intersects_rect(Point a, Point b, const Rect& r);
bool polyline_intersects_rect(std::span<const Point> path, const Rect& r);

enum class GlyphKind { Molecule, TextBlock, PlusSign, Arrow };

std::string_view to_string(GlyphKind kind);

struct Stroke {
  std::vector<Point> points;
  double width = 1.0;
  bool closed = false;
  bool filled = false;
};

struct TextRun {
  Point origin;  // left end of the baseline
  std::string text;
  double font_px = 12.0;
};

struct WordBox {
  ConditionWord word;
  Rect box;                  // local coordinates
  std::string source_field;  // record field the word came from, e.g. "solvents[0]"
};

// Drawing unit in local coordinates with origin at the top-left corner of its
// extent [0, width] x [0, height].
struct Glyph {
  GlyphKind kind = GlyphKind::Molecule;
  double width = 0.0;
  double height = 0.0;
  std::vector<Stroke> strokes;
  std::vector<TextRun> runs;
  std::string smiles;          // Molecule
  std::vector<WordBox> words;  // TextBlock
  // TextBlock: point on the arrow centerline the block is laid out around
  // (may fall outside the extent). Arrow: where its condition block sits.
  Point anchor;

  bool empty() const { return width <= 0.0 || height <= 0.0; }
};

// Text metrics for the monospace face used by the renderer.
double char_advance(double font_px);
double line_height(double font_px);
std::size_t display_length(std::string_view utf8);

}  // namespace rxnkit::synthgen
