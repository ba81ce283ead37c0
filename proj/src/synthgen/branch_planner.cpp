#include <algorithm>
#include <cmath>
#include <numbers>

#include "layout_internal.hpp"

namespace rxnkit::synthgen {

namespace {

// Diagonal segments stay a few degrees inside the published maximum.
constexpr double kFanAngleDeg = 25.0;

struct Row {
  detail::DecorationInput input;
  detail::Decoration decoration;
  detail::MoleculeGroup products;
  double label_length = 0.0;
  double axis = 0.0;
};

}  // namespace

Layout plan_branch(std::span<const ReactionRecord> records, const Style& style, Rng& rng,
                   const Depictor* depictor_ptr) {
  if (records.size() < 2 || records.size() > 3) {
    throw Error(ErrorCode::UnsupportedSize,
                "branch layouts take 2 or 3 records, got " + std::to_string(records.size()));
  }
  detail::require_records(records, ErrorCode::InvalidBranch);
  const std::string& shared = records.front().reactant_smiles.front();
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].reactant_smiles.front() != shared) {
      throw Error(ErrorCode::InvalidBranch, "record " + std::to_string(i) +
                                                " does not share the first reactant '" + shared +
                                                "'");
    }
  }
  const Depictor& depictor = detail::resolve(depictor_ptr);
  const double gap = style.gap();
  const int k = static_cast<int>(records.size());

  Glyph source = depictor.depict(shared, style.molecule_scale, rng);
  std::vector<Provenance> source_prov;
  for (int i = 0; i < k; ++i) {
    source_prov.push_back({ComponentRole::Reactant, i, "reactant_smiles[0]"});
  }

  std::vector<Row> rows(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    Row& row = rows[static_cast<std::size_t>(i)];
    const ReactionRecord& r = records[static_cast<std::size_t>(i)];
    row.input.record = &r;
    row.input.reaction = i;
    for (std::size_t j = 1; j < r.reactant_smiles.size(); ++j) row.input.extra_reactants.push_back(j);
    row.decoration = detail::decorate(row.input, style, rng, depictor);
    row.label_length = std::max(style.min_arrow_length(),
                                row.decoration.width() + style.font_px + style.arrow_head());
    for (std::size_t j = 0; j < r.product_smiles.size(); ++j) {
      row.products.molecules.push_back(
          depictor.depict(r.product_smiles[j], style.molecule_scale, rng));
      row.products.provenance.push_back(
          {{ComponentRole::Product, i, "product_smiles[" + std::to_string(j) + "]"}});
    }
  }

  // Stack the rows, then center the stack on the source molecule's axis.
  auto ascent = [&](const Row& r) {
    return std::max(r.decoration.ascent(style), r.products.half_height());
  };
  auto descent = [&](const Row& r) {
    return std::max(r.decoration.descent(style), r.products.half_height());
  };
  for (std::size_t i = 1; i < rows.size(); ++i) {
    rows[i].axis = rows[i - 1].axis + descent(rows[i - 1]) + gap + ascent(rows[i]);
  }
  double mid = (rows.front().axis + rows.back().axis) / 2;
  double spread = 0.0;
  for (Row& r : rows) {
    r.axis -= mid;
    spread = std::max(spread, std::abs(r.axis));
  }

  double label_length = 0.0;
  for (const Row& r : rows) label_length = std::max(label_length, r.label_length);
  const double x0 = source.width / 2 + 0.5 * gap;
  const double run =
      std::max(2 * gap, spread / std::tan(kFanAngleDeg * std::numbers::pi / 180.0));
  const double x1 = x0 + run;
  const double x2 = x1 + label_length;

  std::vector<PlacedGlyph> glyphs;
  glyphs.push_back(
      detail::place(source, {-source.width / 2, -source.height / 2}, std::move(source_prov)));
  for (const Row& r : rows) {
    Point path[3] = {{x0, 0.0}, {x1, r.axis}, {x2, r.axis}};
    Point label{(x1 + x2 - style.arrow_head()) / 2, r.axis};
    glyphs.push_back(detail::make_arrow(path, label, r.input.reaction, style));
    detail::place_decoration(r.decoration, label, r.input.reaction, style, glyphs);
    r.products.place_at(x2 + gap, r.axis, style, glyphs);
  }
  return detail::fit_to_canvas(std::move(glyphs), style, Pattern::Branch, k);
}

}  // namespace rxnkit::synthgen
