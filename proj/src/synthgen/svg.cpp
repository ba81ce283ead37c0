#include "rxnkit/synthgen/svg.hpp"

#include <cmath>
#include <cstdio>

namespace rxnkit::synthgen {

namespace {

std::string num(double v) {
  if (std::abs(v) < 0.005) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string path_data(const Stroke& s) {
  std::string d;
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    d += i ? " L" : "M";
    d += num(s.points[i].x) + " " + num(s.points[i].y);
  }
  if (s.closed) d += " Z";
  return d;
}

void render_glyph(const PlacedGlyph& g, int id, std::string& out) {
  const Placement& p = g.placement;
  out += "  <g";
  if (id >= 0) out += " data-object-id=\"" + std::to_string(id) + "\"";
  out += " data-kind=\"" + std::string(to_string(g.glyph.kind)) + "\"";
  if (g.arrow_of >= 0) out += " data-reaction=\"" + std::to_string(g.arrow_of) + "\"";
  out += " transform=\"matrix(" + num(p.scale) + " 0 0 " + num(p.scale) + " " + num(p.dx) + " " +
         num(p.dy) + ")\">\n";
  for (std::size_t i = 0; i < g.glyph.strokes.size(); ++i) {
    const Stroke& s = g.glyph.strokes[i];
    out += "    <path";
    if (g.glyph.kind == GlyphKind::Arrow) out += i == 0 ? " class=\"arrow\"" : " class=\"arrow-head\"";
    out += " d=\"" + path_data(s) + "\" fill=\"" + (s.filled ? "#000000" : "none") +
           "\" stroke=\"#000000\" stroke-width=\"" + num(s.width) + "\"/>\n";
  }
  for (const TextRun& r : g.glyph.runs) {
    out += "    <text x=\"" + num(r.origin.x) + "\" y=\"" + num(r.origin.y) +
           "\" font-family=\"monospace\" font-size=\"" + num(r.font_px) + "\">" +
           escape(r.text) + "</text>\n";
  }
  out += "  </g>\n";
}

}  // namespace

std::string render_svg(const Layout& layout) {
  const std::string w = std::to_string(layout.canvas_width_px);
  const std::string h = std::to_string(layout.canvas_height_px);
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w + "\" height=\"" + h +
         "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h + "\" fill=\"#ffffff\"/>\n";
  std::vector<int> ids = object_ids(layout);
  for (std::size_t i = 0; i < layout.glyphs.size(); ++i) render_glyph(layout.glyphs[i], ids[i], out);
  out += "</svg>\n";
  return out;
}

}  // namespace rxnkit::synthgen
