#include <algorithm>
#include <limits>

#include "layout_internal.hpp"

namespace rxnkit::synthgen {

namespace {

using detail::Decoration;
using detail::DecorationInput;
using detail::MoleculeGroup;

void check_chain(std::span<const ReactionRecord> records) {
  if (records.empty()) throw Error(ErrorCode::InvalidChain, "a chain needs at least one record");
  detail::require_records(records, ErrorCode::InvalidChain);
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    if (records[i].product_smiles.size() != 1) {
      throw Error(ErrorCode::InvalidChain,
                  "record " + std::to_string(i) + " continues the chain and must have one product");
    }
    if (records[i + 1].reactant_smiles.front() != records[i].product_smiles.front()) {
      throw Error(ErrorCode::InvalidChain, "record " + std::to_string(i + 1) +
                                               " does not start from the product of record " +
                                               std::to_string(i));
    }
  }
}

// One arrow plus the products it points at.
struct Step {
  DecorationInput input;
  Decoration decoration;
  double arrow_length = 0.0;
  MoleculeGroup products;
};

struct Chain {
  MoleculeGroup reactants;
  std::vector<Step> steps;
};

Chain build_chain(std::span<const ReactionRecord> records, const Style& style, Rng& rng,
                  const Depictor& depictor) {
  Chain chain;
  const ReactionRecord& first = records.front();
  for (std::size_t j = 0; j < first.reactant_smiles.size(); ++j) {
    chain.reactants.molecules.push_back(
        depictor.depict(first.reactant_smiles[j], style.molecule_scale, rng));
    chain.reactants.provenance.push_back(
        {{ComponentRole::Reactant, 0, "reactant_smiles[" + std::to_string(j) + "]"}});
  }
  const int k = static_cast<int>(records.size());
  for (int i = 0; i < k; ++i) {
    const ReactionRecord& r = records[static_cast<std::size_t>(i)];
    Step step;
    step.input.record = &r;
    step.input.reaction = i;
    if (i > 0) {
      for (std::size_t j = 1; j < r.reactant_smiles.size(); ++j) {
        step.input.extra_reactants.push_back(j);
      }
    }
    step.decoration = detail::decorate(step.input, style, rng, depictor);
    step.arrow_length = std::max(style.min_arrow_length(),
                                 step.decoration.width() + style.font_px + style.arrow_head());
    for (std::size_t j = 0; j < r.product_smiles.size(); ++j) {
      step.products.molecules.push_back(
          depictor.depict(r.product_smiles[j], style.molecule_scale, rng));
      std::vector<Provenance> prov = {
          {ComponentRole::Product, i, "product_smiles[" + std::to_string(j) + "]"}};
      if (i + 1 < k) prov.push_back({ComponentRole::Reactant, i + 1, "reactant_smiles[0]"});
      step.products.provenance.push_back(std::move(prov));
    }
    chain.steps.push_back(std::move(step));
  }
  return chain;
}

double step_width(const Step& s, const Style& style) {
  return 2 * style.gap() + s.arrow_length + s.products.width(style);
}

double group_ascent(const MoleculeGroup& g) { return g.half_height(); }

Layout plan_chain(std::span<const ReactionRecord> records, const Style& style, Rng& rng,
                  const ChainOptions& options, bool wrap) {
  check_chain(records);
  const Depictor& depictor = detail::resolve(options.depictor);
  Chain chain = build_chain(records, style, rng, depictor);
  const double gap = style.gap();

  double natural = chain.reactants.width(style);
  for (const Step& s : chain.steps) natural += step_width(s, style);
  double limit = std::numeric_limits<double>::infinity();
  if (wrap) {
    if (options.wrap_width_px) {
      limit = *options.wrap_width_px;
    } else if (options.wrap_fraction) {
      limit = natural * *options.wrap_fraction;
    } else {
      limit = style.canvas_width_px - 2.0 * style.padding_px;
    }
  }

  // Each line starts with a molecule group: the reactants for the first line,
  // a re-drawn copy of the previous line's last product otherwise.
  struct Line {
    MoleculeGroup head;
    std::vector<std::size_t> steps;
  };
  std::vector<Line> lines;
  lines.push_back({chain.reactants, {}});
  double x = chain.reactants.width(style);
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    double w = step_width(chain.steps[i], style);
    if (!lines.back().steps.empty() && x + w > limit) {
      // Break after the product of step i-1; it no longer feeds step i directly.
      MoleculeGroup& prev = chain.steps[i - 1].products;
      auto& prov = prev.provenance.back();
      std::erase_if(prov, [](const Provenance& p) { return p.role == ComponentRole::Reactant; });
      MoleculeGroup copy;
      copy.molecules.push_back(depictor.depict(prev.molecules.back().smiles,
                                               style.molecule_scale, rng));
      copy.provenance.push_back(
          {{ComponentRole::Reactant, static_cast<int>(i), "reactant_smiles[0]"}});
      x = copy.width(style);
      lines.push_back({std::move(copy), {}});
    }
    lines.back().steps.push_back(i);
    x += w;
  }

  std::vector<PlacedGlyph> glyphs;
  double axis = 0.0;
  double prev_descent = 0.0;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const Line& line = lines[n];
    double ascent = group_ascent(line.head);
    double descent = line.head.half_height();
    for (std::size_t i : line.steps) {
      const Step& s = chain.steps[i];
      ascent = std::max({ascent, s.decoration.ascent(style), group_ascent(s.products)});
      descent = std::max({descent, s.decoration.descent(style), s.products.half_height()});
    }
    if (n > 0) axis += prev_descent + 2 * gap + ascent;
    prev_descent = descent;

    line.head.place_at(0.0, axis, style, glyphs);
    double cursor = line.head.width(style);
    for (std::size_t i : line.steps) {
      const Step& s = chain.steps[i];
      double x0 = cursor + gap;
      double x1 = x0 + s.arrow_length;
      Point path[2] = {{x0, axis}, {x1, axis}};
      Point label{(x0 + x1 - style.arrow_head()) / 2, axis};
      glyphs.push_back(detail::make_arrow(path, label, s.input.reaction, style));
      detail::place_decoration(s.decoration, label, s.input.reaction, style, glyphs);
      s.products.place_at(x1 + gap, axis, style, glyphs);
      cursor = x1 + gap + s.products.width(style);
    }
  }
  // A multiple-line plan that never had to break is a single-line image.
  return detail::fit_to_canvas(std::move(glyphs), style,
                               lines.size() > 1 ? Pattern::MultipleLine : Pattern::SingleLine,
                               static_cast<int>(records.size()));
}

}  // namespace

Layout plan_single_line(std::span<const ReactionRecord> records, const Style& style, Rng& rng,
                        const ChainOptions& options) {
  return plan_chain(records, style, rng, options, false);
}

Layout plan_multiple_line(std::span<const ReactionRecord> records, const Style& style, Rng& rng,
                          const ChainOptions& options) {
  return plan_chain(records, style, rng, options, true);
}

}  // namespace rxnkit::synthgen
