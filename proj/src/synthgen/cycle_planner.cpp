#include <algorithm>
#include <cmath>
#include <numbers>

#include "layout_internal.hpp"

namespace rxnkit::synthgen {

namespace {

constexpr int kArcSamples = 96;
constexpr int kMaxGrowSteps = 120;
constexpr double kGrowFactor = 1.05;

struct Arc {
  detail::DecorationInput input;
  detail::Decoration decoration;
  double drawn_gap = 0.0;
  std::vector<Point> path;
  Point label;
};

Rect centered(const Glyph& g, Point c) {
  return {c.x - g.width / 2, c.y - g.height / 2, c.x + g.width / 2, c.y + g.height / 2};
}

bool hits_any(std::span<const Point> path, std::span<const Rect> rects) {
  return std::any_of(rects.begin(), rects.end(),
                     [&](const Rect& r) { return polyline_intersects_rect(path, r); });
}

double polyline_length(std::span<const Point> path) {
  double len = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    len += std::hypot(path[i].x - path[i - 1].x, path[i].y - path[i - 1].y);
  }
  return len;
}

// Longest run of ellipse samples between the two angles that stays clear of
// both end rects.
std::vector<Point> trimmed_arc(double rx, double ry, double a0, double a1, const Rect& from,
                               const Rect& to) {
  std::vector<Point> best;
  std::vector<Point> run;
  for (int s = 0; s <= kArcSamples; ++s) {
    double a = a0 + (a1 - a0) * s / kArcSamples;
    Point p{rx * std::cos(a), ry * std::sin(a)};
    if (from.contains(p) || to.contains(p)) {
      if (run.size() > best.size()) best = run;
      run.clear();
    } else {
      run.push_back(p);
    }
  }
  if (run.size() > best.size()) best = run;
  return best;
}

// Distance from the block's centerline to its nearest word.
double centerline_gap(const Glyph& block) {
  double gap = 0.0;
  bool first = true;
  for (const WordBox& w : block.words) {
    double d = w.box.y_min >= block.anchor.y ? w.box.y_min - block.anchor.y
                                             : block.anchor.y - w.box.y_max;
    gap = first ? d : std::min(gap, d);
    first = false;
  }
  return gap;
}

}  // namespace

Layout plan_cycle(std::span<const ReactionRecord> records, const Style& style, Rng& rng,
                  const Depictor* depictor_ptr) {
  const int k = static_cast<int>(records.size());
  if (k < 3 || k > 9) {
    throw Error(ErrorCode::UnsupportedSize,
                "cycle layouts take 3 to 9 records, got " + std::to_string(k));
  }
  detail::require_records(records, ErrorCode::InvalidCycle);
  for (int i = 0; i < k; ++i) {
    const ReactionRecord& r = records[static_cast<std::size_t>(i)];
    const ReactionRecord& prev = records[static_cast<std::size_t>((i + k - 1) % k)];
    if (r.reactant_smiles.size() != 1 || r.product_smiles.size() != 1) {
      throw Error(ErrorCode::InvalidCycle,
                  "cycle record " + std::to_string(i) + " must have one reactant and one product");
    }
    if (r.reactant_smiles.front() != prev.product_smiles.front()) {
      throw Error(ErrorCode::InvalidCycle, "record " + std::to_string(i) +
                                               " does not start from the product of record " +
                                               std::to_string((i + k - 1) % k));
    }
  }
  const Depictor& depictor = detail::resolve(depictor_ptr);
  const double gap = style.gap();
  const double margin = 0.6 * gap;

  // Node i is record i's reactant, i.e. record i-1's product.
  std::vector<Glyph> nodes;
  for (int i = 0; i < k; ++i) {
    nodes.push_back(depictor.depict(records[static_cast<std::size_t>(i)].reactant_smiles.front(),
                                    style.molecule_scale, rng));
  }
  std::vector<Arc> arcs(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    Arc& arc = arcs[static_cast<std::size_t>(i)];
    arc.input.record = &records[static_cast<std::size_t>(i)];
    arc.input.reaction = i;
    arc.input.block_options.wrap_chars = 10;
    arc.decoration = detail::decorate(arc.input, style, rng, depictor);
    arc.drawn_gap = centerline_gap(arc.decoration.block);
  }

  const double aspect = (style.canvas_width_px - 2.0 * style.padding_px) /
                        (style.canvas_height_px - 2.0 * style.padding_px);
  double ry = 0.0;
  for (const Glyph& n : nodes) ry = std::max(ry, std::max(n.width, n.height));
  const double step = 2 * std::numbers::pi / k;
  auto angle = [&](int i) { return -std::numbers::pi / 2 + step * i; };

  std::vector<Point> centers(static_cast<std::size_t>(k));
  std::vector<Rect> node_rects(static_cast<std::size_t>(k));
  bool placed = false;
  for (int attempt = 0; attempt < kMaxGrowSteps && !placed; ++attempt, ry *= kGrowFactor) {
    const double rx = ry * aspect;
    for (int i = 0; i < k; ++i) {
      auto u = static_cast<std::size_t>(i);
      centers[u] = {rx * std::cos(angle(i)), ry * std::sin(angle(i))};
      node_rects[u] = centered(nodes[u], centers[u]);
    }
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      for (int j = i + 1; j < k && ok; ++j) {
        ok = !node_rects[static_cast<std::size_t>(i)]
                  .expanded(gap / 2)
                  .intersects(node_rects[static_cast<std::size_t>(j)]);
      }
    }
    if (!ok) continue;

    std::vector<std::vector<Rect>> boxes(static_cast<std::size_t>(k));
    for (int i = 0; i < k && ok; ++i) {
      auto u = static_cast<std::size_t>(i);
      Arc& arc = arcs[u];
      const Rect& from = node_rects[u].expanded(margin);
      const Rect& to = node_rects[static_cast<std::size_t>((i + 1) % k)].expanded(margin);
      arc.path = trimmed_arc(rx, ry, angle(i), angle(i) + step, from, to);
      if (arc.path.size() < 3 ||
          polyline_length(arc.path) < std::max(0.6 * style.min_arrow_length(),
                                               2 * style.arrow_head())) {
        ok = false;
        break;
      }
      double mid = angle(i) + step / 2;
      Point on{rx * std::cos(mid), ry * std::sin(mid)};
      double nx = std::cos(mid) / rx;
      double ny = std::sin(mid) / ry;
      nx /= std::hypot(nx, ny);

      detail::Decoration& d = arc.decoration;
      if (std::abs(nx) < 0.5) {
        // Top and bottom arcs: the block straddles the arc like a straight arrow.
        arc.label = on;
        if (!d.block.empty()) {
          double g = arc.drawn_gap;
          for (int grow = 0;
               grow < 40 && hits_any(arc.path, detail::decoration_ink(d, arc.label, style));
               ++grow) {
            g += 2.0;
            detail::recompose_block(d, arc.input, style, g);
          }
        }
        if (hits_any(arc.path, detail::decoration_ink(d, arc.label, style))) ok = false;
      } else {
        // Side arcs: the whole block sits outside the ellipse.
        double edge = nx > 0 ? -1e300 : 1e300;
        for (Point p : arc.path) edge = nx > 0 ? std::max(edge, p.x) : std::min(edge, p.x);
        double half = d.width() / 2 + margin;
        arc.label = {nx > 0 ? edge + half : edge - half, on.y};
      }
      boxes[u] = detail::decoration_boxes(d, arc.label, style);
    }
    if (!ok) continue;

    // Decorations must clear nodes, other decorations and other arcs.
    for (int i = 0; i < k && ok; ++i) {
      auto u = static_cast<std::size_t>(i);
      for (const Rect& b : boxes[u]) {
        for (const Rect& n : node_rects) {
          if (b.expanded(margin / 2).intersects(n)) ok = false;
        }
        for (int j = 0; j < k; ++j) {
          if (j == i) continue;
          auto v = static_cast<std::size_t>(j);
          if (polyline_intersects_rect(arcs[v].path, b)) ok = false;
          for (const Rect& o : boxes[v]) {
            if (b.expanded(margin / 2).intersects(o)) ok = false;
          }
        }
      }
      if (hits_any(arcs[u].path, node_rects)) ok = false;
    }
    placed = ok;
  }
  if (!placed) {
    throw Error(ErrorCode::LayoutOverflow,
                "no collision-free cycle arrangement for " + std::to_string(k) + " steps");
  }

  std::vector<PlacedGlyph> glyphs;
  for (int i = 0; i < k; ++i) {
    auto u = static_cast<std::size_t>(i);
    int prev = (i + k - 1) % k;
    glyphs.push_back(detail::place(nodes[u], {node_rects[u].x_min, node_rects[u].y_min},
                                   {{ComponentRole::Reactant, i, "reactant_smiles[0]"},
                                    {ComponentRole::Product, prev, "product_smiles[0]"}}));
  }
  for (const Arc& arc : arcs) {
    glyphs.push_back(detail::make_arrow(arc.path, arc.label, arc.input.reaction, style));
    detail::place_decoration(arc.decoration, arc.label, arc.input.reaction, style, glyphs);
  }
  return detail::fit_to_canvas(std::move(glyphs), style, Pattern::Cycle, k);
}

}  // namespace rxnkit::synthgen
