#include "rxnkit/synthgen/condition_block.hpp"

#include <algorithm>

#include "rxnkit/synthgen/smiles_formula.hpp"

namespace rxnkit::synthgen {

namespace {

struct Piece {
  ConditionWord word;
  std::string field;
  bool ends_item = false;
};

struct Line {
  std::string text;
  std::vector<std::pair<const Piece*, std::size_t>> placed;  // piece, char offset
};

void add_item(std::vector<Piece>& out, const std::string& value, ConditionRole role,
              const std::string& field) {
  auto words = split_words(value);
  for (std::size_t i = 0; i < words.size(); ++i) {
    out.push_back({{words[i], role}, field, i + 1 == words.size()});
  }
}

// Items are separated by ", "; the comma belongs to the word it follows,
// as a reader of the image would see it.
void mark_separators(std::vector<Piece>& pieces) {
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    if (pieces[i].ends_item) pieces[i].word.text += ',';
  }
}

std::vector<Line> wrap(const std::vector<Piece>& pieces, std::size_t wrap_chars) {
  std::vector<Line> lines;
  std::size_t len = 0;
  for (const Piece& p : pieces) {
    std::size_t wlen = display_length(p.word.text);
    std::size_t sep = len == 0 ? 0 : 1;
    if (lines.empty() || (len > 0 && len + sep + wlen > wrap_chars)) {
      lines.emplace_back();
      len = 0;
      sep = 0;
    }
    Line& line = lines.back();
    if (sep) line.text += ' ';
    len += sep;
    line.placed.emplace_back(&p, len);
    line.text += p.word.text;
    len += wlen;
  }
  return lines;
}

}  // namespace

std::vector<std::size_t> molecular_agents(const ReactionRecord& record) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < record.agents.size(); ++i) {
    if (looks_like_smiles(record.agents[i])) out.push_back(i);
  }
  return out;
}

Glyph compose_condition_block(const ReactionRecord& record, const Style& style, Rng& rng,
                              const ConditionBlockOptions& options) {
  std::vector<Piece> above;
  std::vector<Piece> below;
  auto molecular = options.agents == AgentDepiction::SeparateMolecules
                       ? molecular_agents(record)
                       : std::vector<std::size_t>{};
  for (std::size_t i = 0; i < record.agents.size(); ++i) {
    if (std::find(molecular.begin(), molecular.end(), i) != molecular.end()) continue;
    add_item(above, record.agents[i], ConditionRole::Agt, "agents[" + std::to_string(i) + "]");
  }
  for (std::size_t i = 0; i < record.solvents.size(); ++i) {
    add_item(below, record.solvents[i], ConditionRole::Svt, "solvents[" + std::to_string(i) + "]");
  }
  if (record.temperature) add_item(below, *record.temperature, ConditionRole::Tem, "temperature");
  if (record.time) add_item(below, *record.time, ConditionRole::Time, "time");
  if (record.yield_pct) add_item(below, *record.yield_pct, ConditionRole::Yld, "yield_pct");

  mark_separators(above);
  mark_separators(below);

  Glyph g;
  g.kind = GlyphKind::TextBlock;
  if (above.empty() && below.empty()) return g;

  const double font = style.font_px;
  const double pad = 0.3 * font;
  const double lh = line_height(font);
  const double cw = char_advance(font);
  const double gap = options.gap_px ? *options.gap_px
                                    : pad + style.line_width_px + rng.uniform_real(0.0, 2.0);
  const auto wrap_chars = static_cast<std::size_t>(std::max(options.wrap_chars, 1));

  std::vector<Line> top = wrap(above, wrap_chars);
  std::vector<Line> bottom = wrap(below, wrap_chars);

  std::size_t widest = 0;
  for (const auto* group : {&top, &bottom}) {
    for (const Line& l : *group) widest = std::max(widest, display_length(l.text));
  }
  g.width = static_cast<double>(widest) * cw + 2 * pad;

  double top_height = static_cast<double>(top.size()) * lh;
  double bottom_height = static_cast<double>(bottom.size()) * lh;
  double above_start = pad;
  double centerline;
  double below_start;
  if (!top.empty() && !bottom.empty()) {
    centerline = pad + top_height + gap;
    below_start = centerline + gap;
    g.height = below_start + bottom_height + pad;
  } else if (!top.empty()) {
    centerline = pad + top_height + gap;
    below_start = 0.0;
    g.height = pad + top_height + pad;
  } else {
    centerline = pad - gap;
    below_start = pad;
    g.height = pad + bottom_height + pad;
  }
  g.anchor = {g.width / 2, centerline};

  auto lay = [&](const std::vector<Line>& lines, double y0) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const Line& line = lines[i];
      double line_w = static_cast<double>(display_length(line.text)) * cw;
      double x0 = (g.width - line_w) / 2;
      double top_y = y0 + static_cast<double>(i) * lh;
      g.runs.push_back({{x0, top_y + 0.95 * font}, line.text, font});
      for (const auto& [piece, offset] : line.placed) {
        double wx = x0 + static_cast<double>(offset) * cw;
        double ww = static_cast<double>(display_length(piece->word.text)) * cw;
        g.words.push_back({piece->word, {wx, top_y, wx + ww, top_y + lh}, piece->field});
      }
    }
  };
  lay(top, above_start);
  lay(bottom, below_start);
  return g;
}

}  // namespace rxnkit::synthgen
