#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "rxnkit/assembler/assembler.hpp"
#include "rxnkit/core/annotation_json.hpp"

namespace rxnkit::assembler {

// Keys in order: reaction_smiles (null when not formable), reactant_smiles,
// agent_smiles, product_smiles, agents_text, solvents_text, temperature, time,
// yield_pct (null when absent), provenance {reactants, agents, products, texts}.
Json assembled_to_json(const AssembledReaction& r);
AssembledReaction assembled_from_json(const Json& j, std::string_view path = "reaction");

Json export_json(std::span<const AssembledReaction> records);
std::vector<AssembledReaction> import_json(const Json& j);

// Writes the array with a trailing newline, creating parent directories.
// Throws Error(Io).
void export_json_file(std::span<const AssembledReaction> records,
                      const std::filesystem::path& path);

}  // namespace rxnkit::assembler
