#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rxnkit/core/types.hpp"

namespace rxnkit::assembler {

struct AssembledReaction {
  std::vector<std::string> reactant_smiles;
  std::vector<std::string> agent_smiles;
  std::vector<std::string> product_smiles;
  // One entry per drawn item. Consecutive words of one role are joined with a
  // space; a word ending in ',' closes its item.
  std::vector<std::string> agents_text;
  std::vector<std::string> solvents_text;
  std::optional<std::string> temperature;
  std::optional<std::string> time;
  std::optional<std::string> yield_pct;

  // Object ids behind each slot.
  struct Sources {
    std::vector<int> reactants;
    std::vector<int> agents;
    std::vector<int> products;
    std::vector<int> texts;

    friend bool operator==(const Sources&, const Sources&) = default;
  } provenance;

  friend bool operator==(const AssembledReaction&, const AssembledReaction&) = default;
};

// Separator used when a scalar role occurs more than once.
inline constexpr std::string_view kScalarSeparator = "; ";

// Str reactants/products give SMILES; Str conditions become agent SMILES; Txt
// condition words are regrouped into items and routed by role. Txt members of reactant or product
// lists carry no SMILES and are skipped. Throws Error(IncompleteAssembly)
// naming the first Str id without a SMILES entry.
std::vector<AssembledReaction> assemble(const ImageAnnotation& prediction,
                                        const std::map<int, std::vector<ConditionWord>>& words,
                                        const std::map<int, std::string>& smiles);

// Uses the annotation's own condition_texts and smiles maps.
std::vector<AssembledReaction> assemble(const ImageAnnotation& annotation);

// "reactants>agents>products", each segment '.'-joined. Throws
// Error(InvalidReaction) when reactants or products are empty.
std::string to_reaction_smiles(const AssembledReaction& r);

}  // namespace rxnkit::assembler
