#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace rxnkit::synthgen {

// Element counts for a SMILES string, including implicit hydrogens on
// organic-subset atoms. Returns nullopt when the string is not well-formed
// SMILES (unknown symbols, unbalanced branches or brackets, open rings).
std::optional<std::map<std::string, int>> element_counts(std::string_view smiles);

// Hill order: C, then H, then the rest alphabetically (all alphabetical when
// there is no carbon).
std::string hill_formula(const std::map<std::string, int>& counts);

// True when element_counts accepts the string.
bool looks_like_smiles(std::string_view s);

}  // namespace rxnkit::synthgen
