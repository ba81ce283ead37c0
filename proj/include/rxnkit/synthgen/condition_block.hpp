#pragma once

#include <optional>
#include <vector>

#include "rxnkit/core/rng.hpp"
#include "rxnkit/core/types.hpp"
#include "rxnkit/synthgen/glyph.hpp"
#include "rxnkit/synthgen/style.hpp"

namespace rxnkit::synthgen {

enum class AgentDepiction {
  // Agents that parse as SMILES are drawn as molecules; only the rest are text.
  SeparateMolecules,
  AllText,
};

struct ConditionBlockOptions {
  AgentDepiction agents = AgentDepiction::SeparateMolecules;
  // Distance from the arrow centerline to the nearest text edge. Drawn from
  // the rng when absent.
  std::optional<double> gap_px;
  // Line wrap limit in characters.
  int wrap_chars = 16;
};

// Agent words go above the arrow; solvent, temperature, time and yield words
// go below it in that order. Items are comma-separated within a line.
// Returns an empty TextBlock (zero extent) when nothing is rendered as text.
Glyph compose_condition_block(const ReactionRecord& record, const Style& style, Rng& rng,
                              const ConditionBlockOptions& options = {});

// Indices of record.agents that SeparateMolecules draws as molecule glyphs.
std::vector<std::size_t> molecular_agents(const ReactionRecord& record);

}  // namespace rxnkit::synthgen
