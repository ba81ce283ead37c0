#include "rxnkit/assembler/assembler.hpp"

#include <algorithm>

#include "rxnkit/core/errors.hpp"

namespace rxnkit::assembler {

namespace {

void append_scalar(std::optional<std::string>& field, const std::string& item) {
  if (!field) {
    field = item;
  } else {
    *field += kScalarSeparator;
    *field += item;
  }
}

// Regroups one text object's words into items: consecutive words of a role
// form one item until a word carries the trailing separator comma.
void route_words(const std::vector<ConditionWord>& words, AssembledReaction& a) {
  std::string item;
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::string text = words[i].text;
    bool closes = text.size() > 1 && text.back() == ',';
    if (closes) text.pop_back();
    if (!item.empty()) item += ' ';
    item += text;
    if (!closes && i + 1 < words.size() && words[i + 1].role == words[i].role) continue;
    switch (words[i].role) {
      case ConditionRole::Agt: a.agents_text.push_back(item); break;
      case ConditionRole::Svt: a.solvents_text.push_back(item); break;
      case ConditionRole::Tem: append_scalar(a.temperature, item); break;
      case ConditionRole::Time: append_scalar(a.time, item); break;
      case ConditionRole::Yld: append_scalar(a.yield_pct, item); break;
    }
    item.clear();
  }
}

std::vector<int> sorted(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::vector<AssembledReaction> assemble(const ImageAnnotation& prediction,
                                        const std::map<int, std::vector<ConditionWord>>& words,
                                        const std::map<int, std::string>& smiles) {
  auto structure_smiles = [&](int id, std::size_t reaction) -> const std::string* {
    const DetectedObject* o = prediction.find_object(id);
    if (o == nullptr) {
      throw Error(ErrorCode::IncompleteAssembly, "reaction " + std::to_string(reaction) +
                                                     " references unknown object " +
                                                     std::to_string(id));
    }
    if (o->cls != ObjectClass::Str) return nullptr;
    auto it = smiles.find(id);
    if (it == smiles.end()) {
      throw Error(ErrorCode::IncompleteAssembly,
                  "no SMILES for structure object " + std::to_string(id));
    }
    return &it->second;
  };

  std::vector<AssembledReaction> out;
  for (std::size_t r = 0; r < prediction.reactions.size(); ++r) {
    const ReactionAnnotation& rx = prediction.reactions[r];
    AssembledReaction a;
    for (int id : sorted(rx.reactants)) {
      if (const std::string* s = structure_smiles(id, r)) {
        a.reactant_smiles.push_back(*s);
        a.provenance.reactants.push_back(id);
      }
    }
    for (int id : sorted(rx.products)) {
      if (const std::string* s = structure_smiles(id, r)) {
        a.product_smiles.push_back(*s);
        a.provenance.products.push_back(id);
      }
    }
    for (int id : sorted(rx.conditions)) {
      if (const std::string* s = structure_smiles(id, r)) {
        a.agent_smiles.push_back(*s);
        a.provenance.agents.push_back(id);
        continue;
      }
      a.provenance.texts.push_back(id);
      auto it = words.find(id);
      if (it != words.end()) route_words(it->second, a);
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<AssembledReaction> assemble(const ImageAnnotation& annotation) {
  return assemble(annotation, annotation.condition_texts, annotation.smiles);
}

std::string to_reaction_smiles(const AssembledReaction& r) {
  if (r.reactant_smiles.empty()) {
    throw Error(ErrorCode::InvalidReaction, "reaction has no reactant SMILES");
  }
  if (r.product_smiles.empty()) {
    throw Error(ErrorCode::InvalidReaction, "reaction has no product SMILES");
  }
  return join(r.reactant_smiles, '.') + ">" + join(r.agent_smiles, '.') + ">" +
         join(r.product_smiles, '.');
}

}  // namespace rxnkit::assembler
